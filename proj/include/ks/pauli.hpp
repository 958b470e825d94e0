#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ks/ray.hpp"

namespace ks {

enum class PauliLetter { I, Z, X };

/// Product observable A (x) B on two qubits, A and B drawn from {I, Z, X}.
/// Basis order |z+z+>, |z+z->, |z-z+>, |z-z->; all matrix entries are
/// integers in {-1, 0, 1}.
struct PauliWord {
    PauliLetter first = PauliLetter::I;
    PauliLetter second = PauliLetter::I;

    bool operator==(const PauliWord&) const = default;

    bool is_identity() const { return first == PauliLetter::I && second == PauliLetter::I; }
    bool is_single_letter() const {
        return (first == PauliLetter::I) != (second == PauliLetter::I);
    }
    bool is_two_letter() const {
        return first != PauliLetter::I && second != PauliLetter::I;
    }

    std::string str() const;
};

using Mat4 = std::array<std::array<std::int64_t, 4>, 4>;

Mat4 pauli_matrix(const PauliWord& w);

Mat4 mat_identity();
Mat4 mat_mul(const Mat4& a, const Mat4& b);
bool mat_commute(const Mat4& a, const Mat4& b);

/// A Pauli word together with the eigenvalue (+1 or -1) asserted for it.
/// The identity word carries no information and is rejected.
class SignedObservable {
  public:
    SignedObservable(PauliWord word, int sign);

    const PauliWord& word() const noexcept { return word_; }
    int sign() const noexcept { return sign_; }

    bool operator==(const SignedObservable&) const = default;

    std::string str() const;  // e.g. "zx+" or "z-" for a single-letter word

  private:
    PauliWord word_;
    int sign_;
};

/**
 * The unique ray spanning the joint eigenspace of two commuting signed
 * observables, computed exactly: the integer matrix
 * (I + s1 M1)(I + s2 M2) equals 4 P for the joint projector P; when P has
 * rank 1 (trace test), any nonzero column spans it.  Returns the canonical
 * ray of the first nonzero column.
 *
 * Throws std::domain_error if the words do not commute or the joint signed
 * eigenspace is not one-dimensional (e.g. equal words, or contradictory
 * signs on the same word).
 */
Ray joint_eigenray(const SignedObservable& o1, const SignedObservable& o2);

}  // namespace ks
