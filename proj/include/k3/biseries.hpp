#pragma once

#include <map>

#include "k3/series.hpp"

namespace k3 {

// Element of the ring "Laurent series in q1, Laurent-bounded power series in
// q2", the expansion domain |q2| < |q1| < 1.  Stored as a map from outer (q2)
// exponent to a TruncatedSeries in the inner variable (q1); all rows share
// one inner truncation order trunc1(), and outer exponents are known for
// every e2 < trunc2().  1/(q1 - q2) expands here in powers of q2/q1.
class BiSeries {
public:
    BiSeries() = default;  // exact zero

    static BiSeries zero(long trunc1, long trunc2);
    // Embed an inner series as the outer-constant row.
    static BiSeries from_inner(const TruncatedSeries& s, long trunc2 = kExact);
    // A single row s * q2^outer_exp.
    static BiSeries row_at(long outer_exp, const TruncatedSeries& s, long trunc2 = kExact);
    static BiSeries from_rows(std::map<long, TruncatedSeries> rows, long trunc1, long trunc2);

    long trunc1() const { return trunc1_; }
    long trunc2() const { return trunc2_; }
    long min_outer() const { return rows_.empty() ? trunc2_ : rows_.begin()->first; }
    bool is_zero() const { return rows_.empty(); }
    const std::map<long, TruncatedSeries>& rows() const { return rows_; }

    // Row at outer exponent e2 (zero series if absent); checked against trunc2.
    TruncatedSeries row(long e2) const;
    // Coefficient of q1^e1 q2^e2, checked against both truncation orders.
    Rational at(long e1, long e2) const;

private:
    std::map<long, TruncatedSeries> rows_;
    long trunc1_ = kExact;
    long trunc2_ = kExact;
};

BiSeries bi_add(const BiSeries& a, const BiSeries& b);
BiSeries bi_sub(const BiSeries& a, const BiSeries& b);
BiSeries bi_neg(const BiSeries& a);
BiSeries bi_scalar_mul(const Rational& c, const BiSeries& a);

// Outer Cauchy product; rows are computed independently (and in parallel),
// then the shared inner truncation is the minimum over the per-row bounds.
BiSeries bi_mul(const BiSeries& a, const BiSeries& b);

// Multiplicative inverse.  Requires the lowest outer row to be invertible as
// an inner series; exact input of more than one row needs explicit caps.
BiSeries bi_invert(const BiSeries& a, long trunc2 = kExact, long trunc1 = kExact);

// Formal exponential; the argument must have strictly positive outer valuation.
BiSeries bi_exp(const BiSeries& a, long trunc2 = kExact);

BiSeries bi_truncate(const BiSeries& a, long trunc1, long trunc2);

}  // namespace k3
