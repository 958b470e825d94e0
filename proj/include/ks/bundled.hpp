#pragma once

#include "ks/ksset.hpp"
#include "ks/question.hpp"

namespace ks {

/// Raw text of the bundled 18-ray set (data/table1.ks), embedded at build time.
const char* bundled_set_text();

/// Raw text of the bundled question labels (data/table2.labels).
const char* bundled_labels_text();

/// The bundled set / labels, parsed on each call.
KSSet bundled_set();
LabelMap bundled_labels();

}  // namespace ks
