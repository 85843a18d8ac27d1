#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "homlie/errors.hpp"

namespace homlie {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational, always stored in lowest terms.
using Rat = boost::multiprecision::cpp_rational;

/// Nonnegative integer GCD; gcd(0, 0) == 0.
inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

/// base**exp for exp >= 0.
inline Int int_pow(const Int& base, unsigned exp) {
    Int result = 1;
    Int b = base;
    unsigned e = exp;
    while (e != 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

/// base**exp for any integer exp; throws DivisionByZero for 0**negative.
inline Rat rat_pow(const Rat& base, int exp) {
    if (exp >= 0) {
        Rat result = 1;
        for (int i = 0; i < exp; ++i) result *= base;
        return result;
    }
    if (base == 0) throw DivisionByZero("zero raised to a negative power");
    Rat inv = Rat(boost::multiprecision::denominator(base),
                  boost::multiprecision::numerator(base));
    Rat result = 1;
    for (int i = 0; i < -exp; ++i) result *= inv;
    return result;
}

} // namespace homlie
