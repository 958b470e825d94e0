#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ks/quadint.hpp"

namespace ks {

/**
 * Ray: a nonzero vector of QuadInt entries, identified up to nonzero real
 * scaling.  Construction rejects the zero vector; everything else (including
 * non-canonical representatives) is a legal value.
 *
 * The canonical representative of an equivalence class has its first nonzero
 * entry positive and its integer coefficient vector primitive (content 1).
 * canonical() is idempotent and invariant under scaling.
 */
class Ray {
  public:
    explicit Ray(std::vector<QuadInt> entries);

    // Convenience for plain-integer vectors.
    static Ray from_ints(std::vector<std::int64_t> entries);

    std::size_t dim() const noexcept { return entries_.size(); }
    const std::vector<QuadInt>& entries() const noexcept { return entries_; }
    const QuadInt& operator[](std::size_t i) const { return entries_[i]; }

    Ray canonical() const;
    Ray scaled(const QuadInt& s) const;  // s must be nonzero

    // Same equivalence class (equal canonical forms).
    bool equivalent_to(const Ray& o) const;

    // Exact componentwise comparison of representatives.
    bool operator==(const Ray&) const = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Ray& r) { return os << r.str(); }

  private:
    std::vector<QuadInt> entries_;
};

// Exact inner product (entries are real, no conjugation).  Throws
// std::invalid_argument on dimension mismatch.
QuadInt dot(const Ray& u, const Ray& v);

/**
 * Result of checking a candidate orthogonal basis: ok iff the sequence has
 * exactly `dim` rays and all pairs are orthogonal.  On failure, `why` says
 * which rule broke and `offending` names the first non-orthogonal pair
 * (indices into the input sequence).
 */
struct BasisCheck {
    enum class Why { Ok, WrongCount, NotOrthogonal };

    bool ok = false;
    Why why = Why::Ok;
    std::optional<std::pair<std::size_t, std::size_t>> offending;
};

BasisCheck check_orthogonal_basis(std::span<const Ray> rays, std::size_t dim);

inline bool is_orthogonal_basis(std::span<const Ray> rays, std::size_t dim) {
    return check_orthogonal_basis(rays, dim).ok;
}

}  // namespace ks
