#include <doctest.h>

#include <random>

#include "k3/series.hpp"

using namespace k3;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, long lo, long hi, long trunc) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    std::map<long, Rational> m;
    for (long e = lo; e < hi; ++e) m[e] = make_rational(num(rng), den(rng));
    return TruncatedSeries::from_coeffs(std::move(m), trunc);
}

}  // namespace

TEST_CASE("construction and accessors") {
    TruncatedSeries z;
    CHECK(z.is_zero());
    CHECK(z.trunc() == kExact);
    CHECK(z.min_exp() == kExact);  // min_exp of the zero series is its truncation

    TruncatedSeries s = TruncatedSeries::from_coeffs({{0, Rational(1)}, {3, Rational(0)}, {7, Rational(2)}}, 5);
    CHECK(s.coeffs().size() == 1);  // zero coefficient and out-of-range exponent dropped
    CHECK(s.at(0) == 1);
    CHECK(s.at(4) == 0);
    CHECK(s.min_exp() == 0);
    CHECK_THROWS_AS(s.at(5), OutOfRange);
    CHECK_THROWS_AS(s.at(7), OutOfRange);

    CHECK(sat_add(kExact - 1, 5) == kExact);
    CHECK(sat_add(kExact, -100) == kExact);
    CHECK(sat_add(3, 4) == 7);
}

TEST_CASE("geometric series inverse") {
    TruncatedSeries one_minus_q =
        TruncatedSeries::from_coeffs({{0, Rational(1)}, {1, Rational(-1)}}, 8);
    TruncatedSeries inv = invert(one_minus_q);
    CHECK(inv.trunc() == 8);
    for (long e = 0; e < 8; ++e) CHECK(inv.at(e) == 1);
    TruncatedSeries prod = mul(one_minus_q, inv);
    CHECK(prod.at(0) == 1);
    for (long e = 1; e < prod.trunc(); ++e) CHECK(prod.at(e) == 0);
}

TEST_CASE("Laurent inversion shifts the truncation window") {
    // a = q^2 (1 - q), trunc 10, valuation 2 -> inverse trunc 10 - 2*2 = 6
    TruncatedSeries a = TruncatedSeries::from_coeffs({{2, Rational(1)}, {3, Rational(-1)}}, 10);
    TruncatedSeries inv = invert(a);
    CHECK(inv.trunc() == 6);
    CHECK(inv.min_exp() == -2);
    for (long e = -2; e < 6; ++e) CHECK(inv.at(e) == 1);
}

TEST_CASE("inversion error cases") {
    CHECK_THROWS_AS(invert(TruncatedSeries::zero(5)), ZeroLeadingCoefficient);
    CHECK_THROWS_AS(invert(TruncatedSeries()), ZeroLeadingCoefficient);

    TruncatedSeries m = TruncatedSeries::monomial(Rational(3), 2);
    TruncatedSeries mi = invert(m);  // exact monomial stays exact
    CHECK(mi.trunc() == kExact);
    CHECK(mi.at(-2) == make_rational(1, 3));

    TruncatedSeries poly = TruncatedSeries::from_coeffs({{0, Rational(1)}, {1, Rational(-1)}}, kExact);
    CHECK_THROWS_AS(invert(poly), Error);  // exact non-monomial needs explicit trunc
    TruncatedSeries inv6 = invert(poly, 6);
    for (long e = 0; e < 6; ++e) CHECK(inv6.at(e) == 1);
}

TEST_CASE("product truncation rule") {
    // trunc = min(a.trunc + b.min_exp, b.trunc + a.min_exp)
    TruncatedSeries a = TruncatedSeries::from_coeffs({{1, Rational(1)}}, 5);
    TruncatedSeries b = TruncatedSeries::from_coeffs({{2, Rational(1)}}, 9);
    CHECK(mul(a, b).trunc() == std::min(5 + 2, 9 + 1));
    TruncatedSeries lau = TruncatedSeries::from_coeffs({{-3, Rational(1)}}, 4);
    CHECK(mul(a, lau).trunc() == std::min(5 - 3, 4 + 1));
}

TEST_CASE("exponential") {
    TruncatedSeries q = TruncatedSeries::from_coeffs({{1, Rational(1)}}, 7);
    TruncatedSeries e = exp_series(q);
    Integer fact = 1;
    for (long n = 0; n < 7; ++n) {
        if (n > 0) fact *= n;
        CHECK(e.at(n) == make_rational(Integer(1), fact));
    }
    CHECK_THROWS_AS(exp_series(TruncatedSeries(Rational(1))), NonzeroConstantTerm);
    TruncatedSeries lau = TruncatedSeries::from_coeffs({{-1, Rational(1)}, {1, Rational(1)}}, 5);
    CHECK_THROWS_AS(exp_series(lau), NonzeroConstantTerm);
    CHECK(exp_series(TruncatedSeries::zero(4)).at(0) == 1);

    // Homomorphism property exp(a + b) = exp(a) exp(b) on random inputs.
    std::mt19937_64 rng(20240811);
    for (int it = 0; it < 10; ++it) {
        TruncatedSeries a = random_series(rng, 1, 6, 10);
        TruncatedSeries b = random_series(rng, 1, 6, 10);
        TruncatedSeries lhs = exp_series(add(a, b));
        TruncatedSeries rhs = mul(exp_series(a), exp_series(b));
        CHECK(equal_on_window(lhs, rhs, 0, 10));
    }
}

TEST_CASE("product form vs naive factor-by-factor expansion") {
    const long T = 12;
    TruncatedSeries pf = product_form([](long) { return -1; }, T);  // partition generating series
    TruncatedSeries naive(Rational(1));
    naive = truncate(naive, T);
    for (long n = 1; n < T; ++n) {
        std::map<long, Rational> geo;
        for (long e = 0; e < T; e += n) geo[e] = Rational(1);  // 1/(1 - q^n) expanded by hand
        naive = mul(naive, TruncatedSeries::from_coeffs(std::move(geo), T));
    }
    CHECK(equal_on_window(pf, naive, 0, T));
    long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56};
    for (long n = 0; n < T; ++n) CHECK(pf.at(n) == expected[n]);

    // positive exponents: prod (1 - q^n)^24 against repeated multiplication
    TruncatedSeries pf24 = product_form([](long) { return 24; }, 9);
    TruncatedSeries naive24(Rational(1));
    naive24 = truncate(naive24, 9);
    for (long n = 1; n < 9; ++n) {
        TruncatedSeries f = TruncatedSeries::from_coeffs({{0, Rational(1)}, {n, Rational(-1)}}, 9);
        naive24 = mul(naive24, pow_series(f, 24));
    }
    CHECK(equal_on_window(pf24, naive24, 0, 9));
}

TEST_CASE("dlog operator and power substitution") {
    TruncatedSeries s = TruncatedSeries::from_coeffs({{0, Rational(5)}, {2, Rational(3)}, {4, Rational(-1)}}, 6);
    TruncatedSeries d = dlog_operator(s);
    CHECK(d.at(0) == 0);
    CHECK(d.at(2) == 6);
    CHECK(d.at(4) == -4);

    TruncatedSeries t = TruncatedSeries::from_coeffs({{1, Rational(1)}, {2, Rational(1)}}, 4);
    TruncatedSeries t3 = substitute_power(t, 3);
    CHECK(t3.trunc() == 3 * (4 - 1) + 1);
    CHECK(t3.at(3) == 1);
    CHECK(t3.at(6) == 1);
    CHECK(t3.at(4) == 0);
    CHECK(substitute_power(TruncatedSeries::monomial(Rational(1), 2), 5).trunc() == kExact);
    CHECK_THROWS_AS(substitute_power(t, 0), OutOfRange);
}

TEST_CASE("shift truncate pow") {
    TruncatedSeries s = TruncatedSeries::from_coeffs({{0, Rational(1)}, {1, Rational(2)}}, 5);
    TruncatedSeries sh = shift(s, -3);
    CHECK(sh.trunc() == 2);
    CHECK(sh.at(-3) == 1);
    CHECK(truncate(s, 1).trunc() == 1);
    CHECK(truncate(s, 1).at(0) == 1);

    TruncatedSeries p0 = pow_series(s, 0);
    CHECK(p0.trunc() == kExact);
    CHECK(p0.at(0) == 1);
    CHECK_THROWS_AS(pow_series(s, -1), OutOfRange);
}

TEST_CASE("equal_on_window guards its window") {
    TruncatedSeries a = TruncatedSeries::zero(5);
    TruncatedSeries b = TruncatedSeries::zero(9);
    CHECK(equal_on_window(a, b, 0, 5));
    CHECK_THROWS_AS(equal_on_window(a, b, 0, 6), InsufficientTruncation);
}

TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(987654321);
    const long T = 12;
    for (int it = 0; it < 20; ++it) {
        TruncatedSeries a = random_series(rng, 0, 8, T);
        TruncatedSeries b = random_series(rng, 0, 8, T);
        TruncatedSeries c = random_series(rng, 0, 8, T);
        CHECK(equal_on_window(mul(a, b), mul(b, a), 0, T));
        CHECK(equal_on_window(mul(mul(a, b), c), mul(a, mul(b, c)), 0, T));
        CHECK(equal_on_window(mul(a, add(b, c)), add(mul(a, b), mul(a, c)), 0, T));
    }
}
