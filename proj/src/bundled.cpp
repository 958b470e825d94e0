#include "ks/bundled.hpp"

#include <sstream>

namespace ks {

KSSet bundled_set() {
    std::istringstream in(bundled_set_text());
    return parse_ksset(in, "<bundled:table1.ks>");
}

LabelMap bundled_labels() {
    std::istringstream in(bundled_labels_text());
    return parse_labels(in, "<bundled:table2.labels>");
}

}  // namespace ks
