#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cusp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
    return r;
}

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
    return r;
}

inline int64_t to_int64(const BigInt& v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value does not fit in int64: " + v.str());
    return static_cast<int64_t>(v);
}

inline std::string rational_str(const Rational& r) {
    auto n = boost::multiprecision::numerator(r);
    auto d = boost::multiprecision::denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

}  // namespace cusp
