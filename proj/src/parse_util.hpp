#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ks::detail {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

// Whitespace-separated tokens with source columns; '#' cuts the line.
inline std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#') {
            ++i;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

}  // namespace ks::detail
