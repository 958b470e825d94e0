#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ks/ksset.hpp"

namespace ks {

/// Total yes/no map over a set's rays (true = yes).
using Assignment = std::map<std::string, bool>;

struct ColoringOptions {
    // Also forbid "yes" on both rays of any orthogonal pair, even when the
    // pair shares no context.  The per-context one-yes rule alone is the
    // default; this stronger rule is opt-in.
    bool strong_orthogonality = false;
};

// Exhaustive backtracking search for an assignment giving every context
// exactly one yes.  Returns empty if none exists.  Requires verify(set).ok;
// throws std::invalid_argument otherwise.
std::optional<Assignment> find_coloring(const KSSet& set, const ColoringOptions& opts = {});

// Exact number of valid assignments, by the same backtracking search.
std::uint64_t count_colorings(const KSSet& set, const ColoringOptions& opts = {});

// Independent oracle: enumerate all 2^n yes/no maps and filter by the rules.
// Deliberately unrelated to the backtracker so the two can check each other.
// Guarded to sets of at most 24 rays.
std::uint64_t count_colorings_bruteforce(const KSSet& set, const ColoringOptions& opts = {});

// Does `assignment` satisfy the coloring rules for `set`?  Total over the
// set's rays; used to validate search results.
bool is_valid_coloring(const KSSet& set, const Assignment& assignment,
                       const ColoringOptions& opts = {});

}  // namespace ks
