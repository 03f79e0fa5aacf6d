#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "extlab/error.hpp"

namespace extlab {

using Integer = boost::multiprecision::cpp_int;

// Overflow-checked 64-bit arithmetic for cochain values. Torsion coordinates
// stay tiny; free coordinates only grow through long linear combinations, and
// when they do we refuse rather than wrap.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 multiplication");
    return r;
}

// Representative in [0, m).
inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline Integer floor_mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    return r < 0 ? Integer(r + m) : r;
}

inline std::int64_t to_int64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw ArithmeticOverflow("value " + v.str() + " does not fit in int64");
    return static_cast<std::int64_t>(v);
}

// Drop-in integer type for the Smith normal form fast path: behaves like
// int64 but throws ArithmeticOverflow instead of wrapping.
class Checked64 {
public:
    Checked64() = default;
    Checked64(std::int64_t v) : v_(v) {} // NOLINT: implicit by design of the template

    std::int64_t value() const { return v_; }

    friend Checked64 operator+(Checked64 a, Checked64 b) { return checked_add(a.v_, b.v_); }
    friend Checked64 operator-(Checked64 a, Checked64 b) { return checked_sub(a.v_, b.v_); }
    friend Checked64 operator*(Checked64 a, Checked64 b) { return checked_mul(a.v_, b.v_); }
    friend Checked64 operator/(Checked64 a, Checked64 b) {
        if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1)
            throw ArithmeticOverflow("int64 division");
        return a.v_ / b.v_;
    }
    friend Checked64 operator%(Checked64 a, Checked64 b) {
        if (b.v_ == -1) return 0;
        return a.v_ % b.v_;
    }
    Checked64 operator-() const { return checked_sub(0, v_); }
    Checked64& operator+=(Checked64 b) { return *this = *this + b; }
    Checked64& operator-=(Checked64 b) { return *this = *this - b; }
    Checked64& operator*=(Checked64 b) { return *this = *this * b; }

    friend auto operator<=>(Checked64, Checked64) = default;
    friend bool operator==(Checked64, Checked64) = default;

private:
    std::int64_t v_ = 0;
};

inline Integer to_integer(const Integer& v) { return v; }
inline Integer to_integer(Checked64 v) { return Integer(v.value()); }

template <class T>
T from_integer(const Integer& v);

template <>
inline Integer from_integer<Integer>(const Integer& v) { return v; }

template <>
inline Checked64 from_integer<Checked64>(const Integer& v) { return Checked64(to_int64(v)); }

template <class T>
T abs_value(const T& v) { return v < T(0) ? T(-v) : v; }

// Returns g = gcd(a, b) >= 0 together with s, t such that s*a + t*b = g.
template <class T>
T extended_gcd(const T& a, const T& b, T& s, T& t) {
    T old_r = a, r = b;
    T old_s = 1, cur_s = 0;
    T old_t = 0, cur_t = 1;
    while (r != T(0)) {
        T q = old_r / r;
        T tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
        tmp = old_t - q * cur_t;
        old_t = cur_t;
        cur_t = tmp;
    }
    if (old_r < T(0)) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

template <class T>
T gcd_value(T a, T b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != T(0)) {
        T r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline std::int64_t lcm_value(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

} // namespace extlab
