#include "ks/nchv.hpp"

#include <algorithm>
#include <stdexcept>

namespace ks {

std::vector<HiddenState> enumerate_states() {
    std::vector<HiddenState> states;
    states.reserve(16);
    for (int z1 : {1, -1})
        for (int x1 : {1, -1})
            for (int z2 : {1, -1})
                for (int x2 : {1, -1}) states.push_back(HiddenState{z1, x1, z2, x2});
    return states;
}

namespace {

int letter_value(PauliLetter letter, int z, int x) {
    switch (letter) {
        case PauliLetter::I: return 1;
        case PauliLetter::Z: return z;
        case PauliLetter::X: return x;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

int observable_value(const HiddenState& state, const PauliWord& word) {
    if (word.is_identity()) {
        throw std::invalid_argument("identity word has no assigned value");
    }
    return letter_value(word.first, state.z1, state.x1) *
           letter_value(word.second, state.z2, state.x2);
}

bool answer(const HiddenState& state, const YesNoQuestion& question) {
    const auto [first, second] = question_observables(question);
    return observable_value(state, first.word()) == first.sign() &&
           observable_value(state, second.word()) == second.sign();
}

std::array<EntangledQuestion, 4> ninth_test_questions() {
    const PauliWord zz{PauliLetter::Z, PauliLetter::Z};
    const PauliWord xx{PauliLetter::X, PauliLetter::X};
    const PauliWord zx{PauliLetter::Z, PauliLetter::X};
    const PauliWord xz{PauliLetter::X, PauliLetter::Z};
    return {
        EntangledQuestion(SignedObservable(zz, +1), SignedObservable(xx, -1)),
        EntangledQuestion(SignedObservable(zz, -1), SignedObservable(xx, +1)),
        EntangledQuestion(SignedObservable(zx, +1), SignedObservable(xz, -1)),
        EntangledQuestion(SignedObservable(zx, -1), SignedObservable(xz, +1)),
    };
}

std::vector<ValueRow> nchv_value_table() {
    const auto questions = ninth_test_questions();
    std::vector<ValueRow> rows;
    rows.reserve(8);
    for (const HiddenState& s : enumerate_states()) {
        if (s.z1 != 1) continue;  // one representative per global-flip pair
        ValueRow row;
        row.representative = s;
        row.products = {
            observable_value(s, {PauliLetter::Z, PauliLetter::Z}),
            observable_value(s, {PauliLetter::X, PauliLetter::X}),
            observable_value(s, {PauliLetter::Z, PauliLetter::X}),
            observable_value(s, {PauliLetter::X, PauliLetter::Z}),
        };
        for (std::size_t i = 0; i < 4; ++i) {
            row.answers[i] = answer(s, questions[i]);
            if (row.answers[i]) ++row.yes_count;
        }
        rows.push_back(row);
    }
    return rows;
}

YesCountProfile context_profile(const std::vector<YesNoQuestion>& questions) {
    YesCountProfile profile;
    for (const HiddenState& s : enumerate_states()) {
        int yes = 0;
        for (const auto& q : questions) {
            if (answer(s, q)) ++yes;
        }
        profile.yes_counts.push_back(yes);
    }
    std::vector<int> sorted = profile.yes_counts;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        profile.distinct.push_back(sorted[i]);
        profile.multiplicity.push_back(j - i);
        i = j;
    }
    return profile;
}

}  // namespace ks
