#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ks::cli {

/**
 * Runs the command-line tool on `args` (without the program name), writing
 * reports to `out` and one-line diagnostics to `err`.
 *
 * Exit codes: 0 = success / claim holds; 1 = verification or claim failure
 * (a context fails orthogonality, a coloring exists, a translation
 * mismatches, a discrimination run is not separated); 2 = usage or input
 * errors (bad flags, unreadable or malformed files, invalid state specs).
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ks::cli
