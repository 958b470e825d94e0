#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ks/question.hpp"

namespace ks {

/**
 * A noncontextual hidden state for two qubits.
 *
 * Each qubit carries a definite value (+1 or -1) for its z and x
 * observables.  Products of commuting local observables are assigned the
 * product of the local values, so every question in the test set has a
 * predetermined answer.
 */
struct HiddenState {
    int z1 = 1;
    int x1 = 1;
    int z2 = 1;
    int x2 = 1;

    bool operator==(const HiddenState&) const = default;
};

/// All 16 hidden states, in lexicographic order with +1 before -1.
std::vector<HiddenState> enumerate_states();

/// Value of a signed one- or two-letter observable in a hidden state.
int observable_value(const HiddenState& state, const PauliWord& word);

/// Does the hidden state answer "yes" to the question?
bool answer(const HiddenState& state, const YesNoQuestion& question);

/// The four questions of the all-entangled test, in a fixed order:
/// (zz+, xx-), (zz-, xx+), (zx+, xz-), (zx-, xz+).
std::array<EntangledQuestion, 4> ninth_test_questions();

/**
 * One row of the hidden-variable value table.
 *
 * Rows are keyed by the three relative signs (x1*z1, z2*z1, x2*z1); the
 * global flip z1 -> -z1 leaves every product unchanged, so 16 states give
 * 8 distinct rows.  `products` holds the values of zz, xx, zx, xz and
 * `answers` the yes/no verdicts on the four entangled questions, in the
 * order of ninth_test_questions().
 */
struct ValueRow {
    HiddenState representative;   // the member with z1 = +1
    std::array<int, 4> products;  // zz, xx, zx, xz
    std::array<bool, 4> answers;
    int yes_count = 0;

    bool operator==(const ValueRow&) const = default;
};

/// The 8-row value table, rows ordered by their representative state.
std::vector<ValueRow> nchv_value_table();

/// How many of a context's questions each hidden state answers "yes".
struct YesCountProfile {
    std::vector<int> yes_counts;          // one entry per hidden state, 16 total
    std::vector<int> distinct;            // sorted distinct yes-counts
    std::vector<std::size_t> multiplicity;  // states per distinct count
};

/// Profile of a list of questions (one context) over all hidden states.
YesCountProfile context_profile(const std::vector<YesNoQuestion>& questions);

}  // namespace ks
