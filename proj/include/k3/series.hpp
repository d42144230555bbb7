#pragma once

#include <functional>
#include <map>

#include "k3/errors.hpp"
#include "k3/rational.hpp"

namespace k3 {

// Truncation sentinel: every coefficient of the series is known exactly
// (constants, monomials, finite Laurent polynomials).  Truncation arithmetic
// saturates at this value.
inline constexpr long kExact = 1L << 60;

inline long sat_add(long a, long b) {
    if (a >= kExact || b >= kExact) return kExact;
    return a + b >= kExact ? kExact : a + b;
}

// Univariate Laurent series with exact rational coefficients, known exactly
// for every exponent e < trunc().  trunc() is a strict upper bound: reading a
// coefficient at e >= trunc() is a contract violation and throws.  min_exp()
// is the lowest stored exponent (== trunc() for the zero series), so every
// stored exponent e satisfies min_exp() <= e < trunc() and no stored
// coefficient is zero.  Values are immutable after construction and may be
// freely shared between threads.
class TruncatedSeries {
public:
    TruncatedSeries() = default;  // exact zero
    explicit TruncatedSeries(const Rational& constant);

    static TruncatedSeries zero(long trunc);
    static TruncatedSeries monomial(const Rational& c, long exponent, long trunc = kExact);
    static TruncatedSeries from_coeffs(std::map<long, Rational> coeffs, long trunc);

    long trunc() const { return trunc_; }
    long min_exp() const { return coeffs_.empty() ? trunc_ : coeffs_.begin()->first; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<long, Rational>& coeffs() const { return coeffs_; }

    // Checked read: throws OutOfRange beyond the truncation order.
    Rational at(long exponent) const;
    // Unchecked read within the known range (0 if absent).
    Rational coeff(long exponent) const;

private:
    std::map<long, Rational> coeffs_;
    long trunc_ = kExact;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries neg(const TruncatedSeries& a);
TruncatedSeries scalar_mul(const Rational& c, const TruncatedSeries& a);

// Cauchy product.  The result truncation is the largest order at which every
// emitted coefficient is provably exact:
//   trunc = min(a.trunc + b.min_exp, b.trunc + a.min_exp).
// Parallelized over output exponents; each coefficient is owned by exactly
// one thread, so the result is identical regardless of scheduling.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

namespace reference {
// Serial baseline kept for testing the parallel kernel against.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
}  // namespace reference

// Multiplicative inverse; handles a Laurent leading exponent v by shifting
// (result truncation a.trunc - 2v).  Exact non-monomial input needs an
// explicit truncation order.
TruncatedSeries invert(const TruncatedSeries& a, long trunc = kExact);

// Formal exponential of a series with strictly positive valuation.
TruncatedSeries exp_series(const TruncatedSeries& a, long trunc = kExact);

// prod_{n=1}^{trunc-1} (1 - q^n)^{expnt(n)}, the engine behind every eta-type
// generating function here.  Each factor is expanded by the generalized
// binomial theorem in exact integer arithmetic.
TruncatedSeries product_form(const std::function<long(long)>& expnt, long trunc);

// D = q d/dq: multiplies the coefficient of q^n by n.
TruncatedSeries dlog_operator(const TruncatedSeries& a);

// q -> q^d: exponents scale by d, truncation becomes d*(trunc-1)+1.
TruncatedSeries substitute_power(const TruncatedSeries& a, long d);

TruncatedSeries truncate(const TruncatedSeries& a, long trunc);
TruncatedSeries shift(const TruncatedSeries& a, long exponent);  // multiply by q^exponent
TruncatedSeries pow_series(const TruncatedSeries& a, long n);    // n >= 0

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return neg(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

// Coefficientwise equality on the exponent window [lo, hi); both series must
// know the whole window.
bool equal_on_window(const TruncatedSeries& a, const TruncatedSeries& b, long lo, long hi);

}  // namespace k3
