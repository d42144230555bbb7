#include "k3/biseries.hpp"

#include <algorithm>
#include <vector>

namespace k3 {

BiSeries BiSeries::zero(long trunc1, long trunc2) {
    BiSeries s;
    s.trunc1_ = trunc1;
    s.trunc2_ = trunc2;
    return s;
}

BiSeries BiSeries::from_inner(const TruncatedSeries& s, long trunc2) {
    return row_at(0, s, trunc2);
}

BiSeries BiSeries::row_at(long outer_exp, const TruncatedSeries& s, long trunc2) {
    std::map<long, TruncatedSeries> rows;
    rows.emplace(outer_exp, s);
    return from_rows(std::move(rows), s.trunc(), trunc2);
}

BiSeries BiSeries::from_rows(std::map<long, TruncatedSeries> rows, long trunc1, long trunc2) {
    BiSeries s;
    s.trunc1_ = trunc1;
    s.trunc2_ = trunc2;
    for (auto& [e2, r] : rows) {
        if (e2 >= trunc2) continue;
        TruncatedSeries rt = truncate(r, trunc1);
        if (!rt.is_zero()) s.rows_.emplace(e2, std::move(rt));
    }
    return s;
}

TruncatedSeries BiSeries::row(long e2) const {
    if (e2 >= trunc2_)
        throw OutOfRange("row at outer exponent " + std::to_string(e2) +
                         " requested beyond truncation order " + std::to_string(trunc2_));
    auto it = rows_.find(e2);
    return it == rows_.end() ? TruncatedSeries::zero(trunc1_) : it->second;
}

Rational BiSeries::at(long e1, long e2) const { return row(e2).at(e1); }

BiSeries bi_add(const BiSeries& a, const BiSeries& b) {
    long T1 = std::min(a.trunc1(), b.trunc1());
    long T2 = std::min(a.trunc2(), b.trunc2());
    std::map<long, TruncatedSeries> rows = a.rows();
    for (const auto& [e2, r] : b.rows()) {
        auto it = rows.find(e2);
        if (it == rows.end())
            rows.emplace(e2, r);
        else
            it->second = add(it->second, r);
    }
    return BiSeries::from_rows(std::move(rows), T1, T2);
}

BiSeries bi_sub(const BiSeries& a, const BiSeries& b) { return bi_add(a, bi_neg(b)); }

BiSeries bi_neg(const BiSeries& a) {
    std::map<long, TruncatedSeries> rows;
    for (const auto& [e2, r] : a.rows()) rows.emplace(e2, neg(r));
    return BiSeries::from_rows(std::move(rows), a.trunc1(), a.trunc2());
}

BiSeries bi_scalar_mul(const Rational& c, const BiSeries& a) {
    if (c == 0) return BiSeries::zero(a.trunc1(), a.trunc2());
    std::map<long, TruncatedSeries> rows;
    for (const auto& [e2, r] : a.rows()) rows.emplace(e2, scalar_mul(c, r));
    return BiSeries::from_rows(std::move(rows), a.trunc1(), a.trunc2());
}

namespace {

// Lowest inner exponent over all stored rows.  A row absent from the map is
// zero only below the shared inner truncation, so product bounds must use
// this global minimum rather than per-pair data.
long inner_min_exp(const BiSeries& s) {
    long m = kExact;
    for (const auto& [e2, r] : s.rows()) m = std::min(m, r.min_exp());
    return m == kExact ? 0 : m;
}

}  // namespace

BiSeries bi_mul(const BiSeries& a, const BiSeries& b) {
    long T2 = std::min(sat_add(a.trunc2(), b.min_outer()), sat_add(b.trunc2(), a.min_outer()));
    long T1 = std::min(sat_add(a.trunc1(), inner_min_exp(b)), sat_add(b.trunc1(), inner_min_exp(a)));
    if (a.is_zero() || b.is_zero()) return BiSeries::zero(T1, T2);
    long lo = a.min_outer() + b.min_outer();

    if (T2 >= kExact) {  // exact outer polynomials: sparse pair loop
        std::map<long, TruncatedSeries> rows;
        for (const auto& [ea, ra] : a.rows())
            for (const auto& [eb, rb] : b.rows()) {
                TruncatedSeries prod = mul(ra, rb);
                auto [it, inserted] = rows.emplace(ea + eb, prod);
                if (!inserted) it->second = add(it->second, prod);
            }
        return BiSeries::from_rows(std::move(rows), T1, T2);
    }

    long n = T2 - lo;
    if (n <= 0) return BiSeries::zero(T1, T2);
    std::vector<TruncatedSeries> out(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < n; ++k) {
        long e2 = lo + k;
        TruncatedSeries sum;  // exact zero
        for (const auto& [ea, ra] : a.rows()) {
            if (ea > e2 - b.min_outer()) break;
            auto it = b.rows().find(e2 - ea);
            if (it == b.rows().end()) continue;
            sum = add(sum, mul(ra, it->second));
        }
        out[static_cast<size_t>(k)] = std::move(sum);
    }
    std::map<long, TruncatedSeries> rows;
    for (long k = 0; k < n; ++k)
        if (!out[static_cast<size_t>(k)].is_zero()) rows.emplace(lo + k, std::move(out[static_cast<size_t>(k)]));
    return BiSeries::from_rows(std::move(rows), T1, T2);
}

BiSeries bi_invert(const BiSeries& a, long trunc2, long trunc1) {
    if (a.is_zero()) throw NonInvertibleLeading("bi_invert: series is zero to working precision");
    long m0 = a.min_outer();
    long native2 = a.trunc2() >= kExact ? kExact : a.trunc2() - 2 * m0;
    long T2 = std::min(native2, trunc2);
    if (T2 >= kExact && a.rows().size() > 1)
        throw Error("bi_invert: exact multi-row input requires an explicit outer truncation order");

    TruncatedSeries inv0;
    try {
        inv0 = invert(a.rows().begin()->second, trunc1);
    } catch (const ZeroLeadingCoefficient&) {
        throw NonInvertibleLeading("bi_invert: lowest outer row is not invertible");
    }
    long count = T2 >= kExact ? 1 : T2 + m0;  // rows at outer exponents -m0 .. T2-1
    if (count <= 0) return BiSeries::zero(inv0.trunc(), T2);

    std::vector<TruncatedSeries> B(static_cast<size_t>(count));
    B[0] = inv0;
    long T1 = inv0.trunc();
    for (long k = 1; k < count; ++k) {
        TruncatedSeries s;
        for (long i = 1; i <= k; ++i) {
            auto it = a.rows().find(m0 + i);
            if (it == a.rows().end()) continue;
            s = add(s, mul(it->second, B[static_cast<size_t>(k - i)]));
        }
        B[static_cast<size_t>(k)] = neg(mul(inv0, s));
        if (B[static_cast<size_t>(k)].trunc() < kExact)
            T1 = std::min(T1, B[static_cast<size_t>(k)].trunc());
    }
    // Rows of `a` absent from its map are zero only below a.trunc1; their
    // products against the Laurent rows of the inverse bound the result.
    long inv_min = kExact;
    for (long k = 0; k < count; ++k)
        if (!B[static_cast<size_t>(k)].is_zero()) inv_min = std::min(inv_min, B[static_cast<size_t>(k)].min_exp());
    if (inv_min < kExact) T1 = std::min(T1, sat_add(a.trunc1(), inv_min));
    T1 = std::min(T1, trunc1);
    std::map<long, TruncatedSeries> rows;
    for (long k = 0; k < count; ++k)
        if (!B[static_cast<size_t>(k)].is_zero()) rows.emplace(-m0 + k, std::move(B[static_cast<size_t>(k)]));
    return BiSeries::from_rows(std::move(rows), T1, T2);
}

BiSeries bi_exp(const BiSeries& a, long trunc2) {
    for (const auto& [e2, r] : a.rows())
        if (e2 <= 0)
            throw NonzeroConstantTerm("bi_exp: argument must have strictly positive outer valuation");
    long T2 = std::min(a.trunc2(), trunc2);
    BiSeries one = BiSeries::from_inner(TruncatedSeries(Rational(1)), T2);
    if (a.is_zero()) return BiSeries::from_rows(one.rows(), a.trunc1(), T2);
    if (T2 >= kExact)
        throw Error("bi_exp: exact nonzero input requires an explicit outer truncation order");

    BiSeries at = bi_truncate(a, a.trunc1(), T2);
    BiSeries acc = one;
    BiSeries term = one;
    long v = at.min_outer();
    for (long j = 1; j * v < T2; ++j) {
        term = bi_scalar_mul(make_rational(1, j), bi_mul(term, at));
        if (term.is_zero()) break;
        acc = bi_add(acc, term);
    }
    return acc;
}

BiSeries bi_truncate(const BiSeries& a, long trunc1, long trunc2) {
    return BiSeries::from_rows(a.rows(), std::min(a.trunc1(), trunc1), std::min(a.trunc2(), trunc2));
}

}  // namespace k3
