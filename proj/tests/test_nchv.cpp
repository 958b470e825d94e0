#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ks/ksset.hpp"
#include "ks/nchv.hpp"
#include "ks/question.hpp"

using ks::Axis;
using ks::EntangledQuestion;
using ks::FactorizableQuestion;
using ks::HiddenState;
using ks::PauliLetter;
using ks::PauliWord;
using ks::ValueRow;
using ks::YesNoQuestion;

namespace {

const std::string kDataDir = KS_DATA_DIR;

PauliWord word(PauliLetter a, PauliLetter b) { return {a, b}; }

constexpr auto Z = PauliLetter::Z;
constexpr auto X = PauliLetter::X;
constexpr auto I = PauliLetter::I;

std::vector<YesNoQuestion> context_questions(const ks::KSSet& set, const ks::LabelMap& labels,
                                             std::size_t ctx_index) {
    std::vector<YesNoQuestion> out;
    for (const auto& member : set.contexts.at(ctx_index).members) {
        out.push_back(labels.at(member));
    }
    return out;
}

}  // namespace

TEST_CASE("sixteen hidden states in lexicographic order") {
    const auto states = ks::enumerate_states();
    REQUIRE(states.size() == 16);

    CHECK(states[0] == HiddenState{1, 1, 1, 1});
    CHECK(states[1] == HiddenState{1, 1, 1, -1});
    CHECK(states[2] == HiddenState{1, 1, -1, 1});
    CHECK(states[7] == HiddenState{1, -1, -1, -1});
    CHECK(states[8] == HiddenState{-1, 1, 1, 1});
    CHECK(states[15] == HiddenState{-1, -1, -1, -1});

    // All distinct, and the index encodes the signs bitwise (+ first).
    for (std::size_t i = 0; i < 16; ++i) {
        const HiddenState& s = states[i];
        CHECK(s.z1 == ((i & 8) ? -1 : 1));
        CHECK(s.x1 == ((i & 4) ? -1 : 1));
        CHECK(s.z2 == ((i & 2) ? -1 : 1));
        CHECK(s.x2 == ((i & 1) ? -1 : 1));
    }
}

TEST_CASE("observable values follow the product rule") {
    const HiddenState s{1, -1, -1, 1};

    CHECK(ks::observable_value(s, word(Z, I)) == 1);
    CHECK(ks::observable_value(s, word(X, I)) == -1);
    CHECK(ks::observable_value(s, word(I, Z)) == -1);
    CHECK(ks::observable_value(s, word(I, X)) == 1);

    CHECK(ks::observable_value(s, word(Z, Z)) == -1);
    CHECK(ks::observable_value(s, word(X, X)) == -1);
    CHECK(ks::observable_value(s, word(Z, X)) == 1);
    CHECK(ks::observable_value(s, word(X, Z)) == 1);

    CHECK_THROWS_AS(ks::observable_value(s, word(I, I)), std::invalid_argument);
}

TEST_CASE("a question is answered yes iff both signs match") {
    const HiddenState s{1, -1, -1, 1};

    CHECK(ks::answer(s, FactorizableQuestion({Axis::Z, +1}, {Axis::X, +1})));
    CHECK_FALSE(ks::answer(s, FactorizableQuestion({Axis::Z, -1}, {Axis::X, +1})));
    CHECK_FALSE(ks::answer(s, FactorizableQuestion({Axis::X, +1}, {Axis::X, +1})));

    CHECK(ks::answer(s, EntangledQuestion({word(Z, Z), -1}, {word(X, X), -1})));
    CHECK_FALSE(ks::answer(s, EntangledQuestion({word(Z, Z), +1}, {word(X, X), -1})));
    CHECK(ks::answer(s, EntangledQuestion({word(Z, X), +1}, {word(X, Z), +1})));
}

TEST_CASE("the four all-entangled test questions") {
    const auto qs = ks::ninth_test_questions();
    CHECK(ks::question_str(qs[0]) == "ent zz+ xx-");
    CHECK(ks::question_str(qs[1]) == "ent zz- xx+");
    CHECK(ks::question_str(qs[2]) == "ent zx+ xz-");
    CHECK(ks::question_str(qs[3]) == "ent zx- xz+");
}

TEST_CASE("the eight-row value table is pinned") {
    const auto table = ks::nchv_value_table();
    REQUIRE(table.size() == 8);

    // products = (zz, xx, zx, xz); answers follow ninth_test_questions().
    const std::vector<ValueRow> expected = {
        {{1, 1, 1, 1}, {1, 1, 1, 1}, {false, false, false, false}, 0},
        {{1, 1, 1, -1}, {1, -1, -1, 1}, {true, false, false, true}, 2},
        {{1, 1, -1, 1}, {-1, 1, 1, -1}, {false, true, true, false}, 2},
        {{1, 1, -1, -1}, {-1, -1, -1, -1}, {false, false, false, false}, 0},
        {{1, -1, 1, 1}, {1, -1, 1, -1}, {true, false, true, false}, 2},
        {{1, -1, 1, -1}, {1, 1, -1, -1}, {false, false, false, false}, 0},
        {{1, -1, -1, 1}, {-1, -1, 1, 1}, {false, false, false, false}, 0},
        {{1, -1, -1, -1}, {-1, 1, -1, 1}, {false, true, false, true}, 2},
    };
    for (std::size_t i = 0; i < 8; ++i) {
        INFO("row ", i);
        CHECK(table[i] == expected[i]);
    }

    // Every row answers yes an even number of times, never exactly once.
    for (const auto& row : table) {
        CHECK((row.yes_count == 0 || row.yes_count == 2));
        CHECK(row.yes_count ==
              std::count(row.answers.begin(), row.answers.end(), true));
    }
}

TEST_CASE("two-letter values are invariant under a global sign flip") {
    const auto qs = ks::ninth_test_questions();
    for (const HiddenState& s : ks::enumerate_states()) {
        const HiddenState flipped{-s.z1, -s.x1, -s.z2, -s.x2};
        for (PauliWord w : {word(Z, Z), word(X, X), word(Z, X), word(X, Z)}) {
            CHECK(ks::observable_value(s, w) == ks::observable_value(flipped, w));
        }
        for (const EntangledQuestion& q : qs) {
            CHECK(ks::answer(s, q) == ks::answer(flipped, q));
        }
    }
}

TEST_CASE("hidden states obey the one-yes rule in the first eight contexts") {
    const ks::KSSet set = ks::load_ksset(kDataDir + "/table1.ks");
    const ks::LabelMap labels = ks::load_labels(kDataDir + "/table2.labels");

    for (std::size_t c = 0; c + 1 < set.contexts.size(); ++c) {
        const auto profile = ks::context_profile(context_questions(set, labels, c));
        INFO("context ", set.contexts[c].name);
        CHECK(profile.yes_counts.size() == 16);
        CHECK(profile.distinct == std::vector<int>{1});
        CHECK(profile.multiplicity == std::vector<std::size_t>{16});
    }
}

TEST_CASE("hidden states break the one-yes rule in the all-entangled context") {
    const ks::KSSet set = ks::load_ksset(kDataDir + "/table1.ks");
    const ks::LabelMap labels = ks::load_labels(kDataDir + "/table2.labels");

    const auto profile = ks::context_profile(context_questions(set, labels, 8));
    REQUIRE(profile.yes_counts.size() == 16);
    CHECK(profile.distinct == std::vector<int>{0, 2});
    CHECK(profile.multiplicity == std::vector<std::size_t>{8, 8});

    // No hidden state ever answers yes exactly once.
    CHECK(std::count(profile.yes_counts.begin(), profile.yes_counts.end(), 1) == 0);

    // The per-state counts agree with the value table via the sign-flip
    // symmetry: state i and its global flip, state 15-i, share a row.
    const auto table = ks::nchv_value_table();
    for (std::size_t i = 0; i < 16; ++i) {
        const std::size_t row = i < 8 ? i : 15 - i;
        CHECK(profile.yes_counts[i] == table[row].yes_count);
    }
}
