#include "ks/pauli.hpp"

#include <stdexcept>

namespace ks {

namespace {

using Mat2 = std::array<std::array<std::int64_t, 2>, 2>;

Mat2 single_qubit(PauliLetter l) {
    switch (l) {
        case PauliLetter::I:
            return {{{1, 0}, {0, 1}}};
        case PauliLetter::Z:
            return {{{1, 0}, {0, -1}}};
        case PauliLetter::X:
            return {{{0, 1}, {1, 0}}};
    }
    throw std::logic_error("unreachable");
}

char letter_char(PauliLetter l) {
    switch (l) {
        case PauliLetter::I:
            return 'i';
        case PauliLetter::Z:
            return 'z';
        case PauliLetter::X:
            return 'x';
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::string PauliWord::str() const {
    // Single-letter words print just the active letter; ii prints as "ii".
    if (is_single_letter()) {
        return std::string(1, letter_char(first == PauliLetter::I ? second : first));
    }
    return std::string{letter_char(first), letter_char(second)};
}

Mat4 pauli_matrix(const PauliWord& w) {
    Mat2 m1 = single_qubit(w.first);
    Mat2 m2 = single_qubit(w.second);
    Mat4 out{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    out[2 * i + k][2 * j + l] = m1[i][j] * m2[k][l];
                }
            }
        }
    }
    return out;
}

Mat4 mat_identity() {
    Mat4 out{};
    for (int i = 0; i < 4; ++i) out[i][i] = 1;
    return out;
}

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
    Mat4 out{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            out[i][j] = s;
        }
    }
    return out;
}

bool mat_commute(const Mat4& a, const Mat4& b) {
    return mat_mul(a, b) == mat_mul(b, a);
}

SignedObservable::SignedObservable(PauliWord word, int sign) : word_(word), sign_(sign) {
    if (word.is_identity()) {
        throw std::invalid_argument("signed observable cannot use the identity word");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("observable sign must be +1 or -1");
    }
}

std::string SignedObservable::str() const {
    return word_.str() + (sign_ > 0 ? "+" : "-");
}

Ray joint_eigenray(const SignedObservable& o1, const SignedObservable& o2) {
    Mat4 m1 = pauli_matrix(o1.word());
    Mat4 m2 = pauli_matrix(o2.word());
    if (!mat_commute(m1, m2)) {
        throw std::domain_error("joint_eigenray: observables " + o1.str() + " and " + o2.str() +
                                " do not commute");
    }

    // 4P = (I + s1 M1)(I + s2 M2), all-integer.
    Mat4 p1 = mat_identity();
    Mat4 p2 = mat_identity();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            p1[i][j] += o1.sign() * m1[i][j];
            p2[i][j] += o2.sign() * m2[i][j];
        }
    }
    Mat4 p4 = mat_mul(p1, p2);

    // Both factors are 2x projectors onto eigenspaces of involutions, so P is
    // a projector and its rank equals tr(P) = tr(4P)/4.
    std::int64_t trace = p4[0][0] + p4[1][1] + p4[2][2] + p4[3][3];
    if (trace != 4) {
        throw std::domain_error("joint_eigenray: joint eigenspace of " + o1.str() + " and " +
                                o2.str() + " has dimension " + std::to_string(trace / 4) +
                                ", expected 1");
    }

    for (int j = 0; j < 4; ++j) {
        bool nonzero = false;
        for (int i = 0; i < 4; ++i) {
            if (p4[i][j] != 0) nonzero = true;
        }
        if (nonzero) {
            std::vector<QuadInt> entries;
            entries.reserve(4);
            for (int i = 0; i < 4; ++i) entries.emplace_back(p4[i][j]);
            return Ray(std::move(entries)).canonical();
        }
    }
    throw std::logic_error("joint_eigenray: rank-1 projector with no nonzero column");
}

}  // namespace ks
