#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ks {

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) {
        throw std::overflow_error("integer overflow in exact arithmetic (add)");
    }
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) {
        throw std::overflow_error("integer overflow in exact arithmetic (sub)");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) {
        throw std::overflow_error("integer overflow in exact arithmetic (mul)");
    }
    return r;
}

inline std::int64_t checked_neg(std::int64_t x) {
    return checked_sub(0, x);
}

}  // namespace detail

/**
 * QuadInt: exact value a + b*sqrt(2) with 64-bit integer coefficients.
 *
 * The representation (a, b) is unique because sqrt(2) is irrational, so
 * equality and zero tests are plain coefficient comparisons.  All arithmetic
 * is overflow-checked and throws std::overflow_error instead of wrapping.
 */
class QuadInt {
  public:
    constexpr QuadInt() noexcept : a_(0), b_(0) {}
    constexpr QuadInt(std::int64_t a, std::int64_t b = 0) noexcept : a_(a), b_(b) {}

    constexpr std::int64_t a() const noexcept { return a_; }
    constexpr std::int64_t b() const noexcept { return b_; }

    constexpr bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

    bool operator==(const QuadInt&) const = default;

    QuadInt operator+(const QuadInt& o) const {
        return QuadInt(detail::checked_add(a_, o.a_), detail::checked_add(b_, o.b_));
    }

    QuadInt operator-(const QuadInt& o) const {
        return QuadInt(detail::checked_sub(a_, o.a_), detail::checked_sub(b_, o.b_));
    }

    QuadInt operator-() const {
        return QuadInt(detail::checked_neg(a_), detail::checked_neg(b_));
    }

    // (a1 + b1*r)(a2 + b2*r) = a1*a2 + 2*b1*b2 + (a1*b2 + b1*a2)*r,  r = sqrt(2)
    QuadInt operator*(const QuadInt& o) const {
        std::int64_t a = detail::checked_add(detail::checked_mul(a_, o.a_),
                                             detail::checked_mul(2, detail::checked_mul(b_, o.b_)));
        std::int64_t b = detail::checked_add(detail::checked_mul(a_, o.b_),
                                             detail::checked_mul(b_, o.a_));
        return QuadInt(a, b);
    }

    QuadInt& operator+=(const QuadInt& o) { return *this = *this + o; }
    QuadInt& operator-=(const QuadInt& o) { return *this = *this - o; }
    QuadInt& operator*=(const QuadInt& o) { return *this = *this * o; }

    // Conjugate a - b*sqrt(2).
    constexpr QuadInt conj() const noexcept { return QuadInt(a_, -b_); }

    // Field norm a^2 - 2 b^2; zero iff the value is zero.
    std::int64_t norm() const {
        return detail::checked_sub(detail::checked_mul(a_, a_),
                                   detail::checked_mul(2, detail::checked_mul(b_, b_)));
    }

    // Sign of the real value a + b*sqrt(2): -1, 0 or +1.  Exact: compares
    // a^2 against 2 b^2 in 128-bit arithmetic, never through a double.
    int sign() const noexcept {
        if (a_ == 0 && b_ == 0) return 0;
        if (a_ >= 0 && b_ >= 0) return +1;
        if (a_ <= 0 && b_ <= 0) return -1;
        __int128 aa = static_cast<__int128>(a_) * a_;
        __int128 bb2 = 2 * static_cast<__int128>(b_) * b_;
        if (a_ > 0) {  // b < 0: positive iff a^2 > 2 b^2
            return aa > bb2 ? +1 : -1;
        }
        // a < 0, b > 0: positive iff 2 b^2 > a^2
        return bb2 > aa ? +1 : -1;
    }

    double to_double() const noexcept {
        return static_cast<double>(a_) + static_cast<double>(b_) * 1.4142135623730950488;
    }

    // Token form matching the set-file grammar: "a" or "a:b".
    std::string str() const {
        if (b_ == 0) return std::to_string(a_);
        return std::to_string(a_) + ":" + std::to_string(b_);
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadInt& q) { return os << q.str(); }

  private:
    std::int64_t a_, b_;
};

// Parses the token forms "a" and "a:b" produced by str(); throws
// std::invalid_argument on anything else.
QuadInt quadint_from_string(const std::string& token);

}  // namespace ks
