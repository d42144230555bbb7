#include "k3/nl_stu.hpp"

#include <algorithm>
#include <numeric>

#include "k3/k3counts.hpp"
#include "k3/modular.hpp"

namespace k3 {

namespace {

// E_2(q2) as outer-constant rows.
BiSeries e2_outer(long inner_trunc, long outer_trunc) {
    TruncatedSeries e2 = eisenstein(2, outer_trunc);
    std::map<long, TruncatedSeries> rows;
    for (long n = 0; n < outer_trunc; ++n)
        rows.emplace(n, TruncatedSeries::monomial(e2.at(n), 0, inner_trunc));
    return BiSeries::from_rows(std::move(rows), inner_trunc, outer_trunc);
}

Integer cube(long n) { return Integer(n) * n * n; }

}  // namespace

Integer discriminant_delta(const NLQuery& q) {
    const Integer m[3][3] = {{Integer(0), Integer(1), Integer(q.d1)},
                             {Integer(1), Integer(0), Integer(q.d2)},
                             {Integer(q.d1), Integer(q.d2), Integer(2 * q.p - 2)}};
    auto minor = [&](int c0, int c1) -> Integer { return m[1][c0] * m[2][c1] - m[1][c1] * m[2][c0]; };
    return m[0][0] * minor(1, 2) - m[0][1] * minor(0, 2) + m[0][2] * minor(0, 1);
}

Rational nl_number(const NLQuery& q, long trunc) {
    Integer delta = discriminant_delta(q);
    if (delta < 0) return Rational(0);
    Integer half = delta / 2;
    if (!half.fits_slong_p()) throw OutOfRange("nl_number: discriminant too large");
    long h = half.get_si();
    if (trunc < 0) trunc = h + 1;
    if (h >= trunc)
        throw InsufficientTruncation("nl_number: discriminant " + to_string(delta) +
                                     " beyond truncation order " + std::to_string(trunc));
    TruncatedSeries s = scalar_mul(Rational(-4), mul(eisenstein(2, trunc), eisenstein(3, trunc)));
    return s.at(h);
}

BiSeries j_difference(long inner_trunc, long outer_trunc) {
    TruncatedSeries j1 = j_normalized(inner_trunc);
    std::map<long, TruncatedSeries> rows;
    rows.emplace(-1, TruncatedSeries::monomial(Rational(-1), 0, inner_trunc));
    rows.emplace(0, sub(j1, TruncatedSeries(Rational(744))));
    for (long n = 1; n < outer_trunc; ++n)
        rows.emplace(n, TruncatedSeries::monomial(-j1.at(n), 0, inner_trunc));
    return BiSeries::from_rows(std::move(rows), inner_trunc, outer_trunc);
}

BiSeries kml_rhs(long inner_trunc, long outer_trunc) {
    BiSeries core = harvey_moore_lhs(f_series(inner_trunc), inner_trunc, outer_trunc);
    BiSeries minus2 = BiSeries::from_inner(TruncatedSeries(Rational(-2)), outer_trunc);
    return bi_add(minus2, bi_scalar_mul(Rational(2), core));
}

std::map<std::pair<long, long>, Rational> kml_series(long d1_max, long d2_max) {
    if (d1_max < 0 || d2_max < 1) throw OutOfRange("kml_series: need d1_max >= 0, d2_max >= 1");
    long outer = d2_max + 3;
    long inner = std::max(90L, d1_max + outer + 10);
    BiSeries rhs = kml_rhs(inner, outer);
    std::map<std::pair<long, long>, Rational> out;
    for (long d2 = 1; d2 <= d2_max; ++d2) {
        Rational inv_cube = make_rational(Integer(1), cube(d2));
        for (long d1 = 0; d1 <= d1_max; ++d1) out[{d1, d2}] = rhs.at(d1, d2) * inv_cube;
    }
    return out;
}

Rational kml_value(long d1, long d2) {
    if (d2 == 0) throw DivisionByZeroDegree("kml_value: d2 = 0 has no degree-cubed normalization");
    if (d1 < 0 || d2 < 0) throw OutOfRange("kml_value: need d1 >= 0, d2 >= 1");
    return kml_series(d1, d2).at({d1, d2});
}

BiSeries harvey_moore_lhs(const TruncatedSeries& f_inner, long inner_trunc, long outer_trunc) {
    BiSeries f1 = BiSeries::from_inner(truncate(f_inner, inner_trunc), outer_trunc);
    BiSeries num = bi_mul(f1, e2_outer(inner_trunc, outer_trunc));
    return bi_mul(num, bi_invert(j_difference(inner_trunc, outer_trunc)));
}

BiSeries harvey_moore_rhs(long inner_trunc, long outer_trunc) {
    // c(n) is needed through the largest k*l with k*d < inner_trunc, l*d < outer_trunc.
    long c_max = (inner_trunc - 1) * (outer_trunc - 1);
    TruncatedSeries f = f_series(c_max + 2);
    TruncatedSeries e2 = eisenstein(2, outer_trunc);

    std::map<long, TruncatedSeries> rows;
    for (long n = 0; n < outer_trunc; ++n) {
        std::map<long, Rational> rc;
        rc[-n] += Rational(-1);  // -q1/(q1 - q2) = -sum_{n>=0} q2^n q1^{-n}
        rc[0] += e2.at(n);
        for (long d = 1; d <= n; ++d) {  // rows n = l*d of the triple sum
            if (n % d != 0) continue;
            long l = n / d;
            Rational l3(cube(l));
            for (long k = 1; k * d < inner_trunc; ++k) rc[k * d] -= l3 * f.at(k * l);
        }
        rows.emplace(n, TruncatedSeries::from_coeffs(std::move(rc), inner_trunc));
    }
    return BiSeries::from_rows(std::move(rows), inner_trunc, outer_trunc);
}

bool harvey_moore_check(long t1, long t2) {
    if (t1 < 1 || t2 < 1) throw OutOfRange("harvey_moore_check: need t1, t2 >= 1");
    long outer = t2 + 2;
    long inner_lhs = std::max(90L, t1 + outer + 10);
    BiSeries lhs = harvey_moore_lhs(f_series(inner_lhs), inner_lhs, outer);
    BiSeries rhs = harvey_moore_rhs(t1 + 2, outer);
    for (long e2 = 0; e2 <= t2; ++e2)
        for (long e1 = -(t2 + 2); e1 <= t1; ++e1)
            if (lhs.at(e1, e2) != rhs.at(e1, e2)) return false;
    return true;
}

namespace {

// (2 N^X, sum_p N_0^p NL(p, a, b)) for one coprime pair.
std::pair<Rational, Rational> pipeline_sides(long a, long b) {
    Rational lhs = Rational(2) * kml_value(a, b);
    long p_max = a * b + 1;  // NL vanishes beyond Delta < 0, i.e. p > a*b + 1
    TruncatedSeries yz = yau_zaslow_series(p_max + 1);
    Rational rhs(0);
    for (long p = 0; p <= p_max; ++p) rhs += yz.at(p) * nl_number(NLQuery{p, a, b});
    return {lhs, rhs};
}

}  // namespace

PipelineReport yz_pipeline_check(long d1, long d2) {
    if (d1 < 1 || d2 < 1) throw OutOfRange("yz_pipeline_check: need d1, d2 >= 1");
    if (std::gcd(d1, d2) != 1)
        throw NotCoprime("yz_pipeline_check: (" + std::to_string(d1) + ", " + std::to_string(d2) +
                         ") is not a coprime pair");
    PipelineReport rep;
    rep.d1 = d1;
    rep.d2 = d2;
    std::tie(rep.lhs, rep.rhs) = pipeline_sides(d1, d2);
    auto [l11, r11] = (d1 == 1 && d2 == 1) ? std::pair(rep.lhs, rep.rhs) : pipeline_sides(1, 1);
    rep.ratio = rep.lhs / rep.rhs;
    rep.calibration = l11 / r11;
    rep.pass = (rep.ratio == rep.calibration);
    return rep;
}

}  // namespace k3
