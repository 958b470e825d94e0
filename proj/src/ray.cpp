#include "ks/ray.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ks {

Ray::Ray(std::vector<QuadInt> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("ray must have positive dimension");
    }
    bool nonzero = false;
    for (const auto& e : entries_) {
        if (!e.is_zero()) {
            nonzero = true;
            break;
        }
    }
    if (!nonzero) {
        throw std::invalid_argument("zero vector is not a ray");
    }
}

Ray Ray::from_ints(std::vector<std::int64_t> entries) {
    std::vector<QuadInt> qs;
    qs.reserve(entries.size());
    for (std::int64_t v : entries) qs.emplace_back(v);
    return Ray(std::move(qs));
}

Ray Ray::scaled(const QuadInt& s) const {
    if (s.is_zero()) {
        throw std::invalid_argument("cannot scale a ray by zero");
    }
    std::vector<QuadInt> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e * s);
    return Ray(std::move(out));
}

// Canonical form of the class { q*(a+b*sqrt2) * r : scalar nonzero }.
//
// Multiply every entry by the conjugate of the first nonzero entry v_k; this
// lands the vector on the representative whose k-th entry is the plain
// integer norm(v_k).  Fixing the overall sign and dividing out the integer
// content of the coefficient vector then yields a representative that is the
// same for every input in the class.
Ray Ray::canonical() const {
    std::size_t k = 0;
    while (entries_[k].is_zero()) ++k;

    const QuadInt conj = entries_[k].conj();
    std::vector<QuadInt> w;
    w.reserve(entries_.size());
    for (const auto& e : entries_) w.push_back(e * conj);

    // w[k] = norm(v_k), a nonzero integer; make it positive.
    if (w[k].sign() < 0) {
        for (auto& e : w) e = -e;
    }

    std::int64_t g = 0;
    for (const auto& e : w) {
        g = std::gcd(g, e.a());
        g = std::gcd(g, e.b());
    }
    for (auto& e : w) e = QuadInt(e.a() / g, e.b() / g);

    return Ray(std::move(w));
}

bool Ray::equivalent_to(const Ray& o) const {
    if (dim() != o.dim()) return false;
    return canonical() == o.canonical();
}

std::string Ray::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ", ";
        os << entries_[i];
    }
    os << ")";
    return os.str();
}

QuadInt dot(const Ray& u, const Ray& v) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument("dot: dimension mismatch (" + std::to_string(u.dim()) +
                                    " vs " + std::to_string(v.dim()) + ")");
    }
    QuadInt acc;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        acc += u[i] * v[i];
    }
    return acc;
}

BasisCheck check_orthogonal_basis(std::span<const Ray> rays, std::size_t dim) {
    for (const Ray& r : rays) {
        if (r.dim() != dim) {
            throw std::invalid_argument("check_orthogonal_basis: ray of dimension " +
                                        std::to_string(r.dim()) + " in dimension-" +
                                        std::to_string(dim) + " check");
        }
    }
    BasisCheck res;
    if (rays.size() != dim) {
        res.why = BasisCheck::Why::WrongCount;
        return res;
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
        for (std::size_t j = i + 1; j < rays.size(); ++j) {
            if (!dot(rays[i], rays[j]).is_zero()) {
                res.why = BasisCheck::Why::NotOrthogonal;
                res.offending = {i, j};
                return res;
            }
        }
    }
    // dim mutually orthogonal nonzero vectors are linearly independent, so
    // they span the space and their rank-1 projectors sum to the identity.
    res.ok = true;
    return res;
}

}  // namespace ks
