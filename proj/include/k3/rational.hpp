#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace k3 {

using Integer = mpz_class;
// Always kept canonical by GMP arithmetic: lowest terms, positive denominator.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

// Decimal string; rationals with denominator != 1 render as "a/b".
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// Extract an integer value; throws if the rational is not an integer.
inline Integer to_integer(const Rational& r) {
    if (r.get_den() != 1) throw std::invalid_argument("to_integer: " + r.get_str() + " is not integral");
    return r.get_num();
}

}  // namespace k3
