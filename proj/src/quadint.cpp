#include "ks/quadint.hpp"

#include <charconv>

namespace ks {

namespace {

std::int64_t int_from(const std::string& token, std::size_t begin, std::size_t end) {
    std::int64_t value = 0;
    const char* first = token.data() + begin;
    const char* last = token.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw std::invalid_argument("bad integer in quadratic-integer token '" + token + "'");
    }
    return value;
}

}  // namespace

QuadInt quadint_from_string(const std::string& token) {
    const std::size_t colon = token.find(':');
    if (colon == std::string::npos) {
        return QuadInt(int_from(token, 0, token.size()));
    }
    return QuadInt(int_from(token, 0, colon), int_from(token, colon + 1, token.size()));
}

}  // namespace ks
