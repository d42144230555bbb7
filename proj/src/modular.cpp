#include "k3/modular.hpp"

#include "k3/arith.hpp"
#include "k3/k3counts.hpp"

namespace k3 {

TruncatedSeries eisenstein(long k, long trunc) {
    if (k < 1) throw OutOfRange("eisenstein: k must be >= 1");
    Rational scale = Rational(4 * k) / bernoulli(k);
    if (k % 2 == 1) scale = -scale;
    std::map<long, Rational> c;
    c[0] = 1;
    for (long n = 1; n < trunc; ++n) c[n] = scale * Rational(sigma(2 * k - 1, n));
    return TruncatedSeries::from_coeffs(std::move(c), trunc);
}

TruncatedSeries delta_normalized(long trunc) {
    if (trunc < 2) throw OutOfRange("delta_normalized: truncation order must be >= 2");
    return shift(product_form([](long) { return 24; }, trunc - 1), 1);
}

TruncatedSeries j_normalized(long trunc) {
    if (trunc < 1) throw OutOfRange("j_normalized: truncation order must be >= 1");
    long T = trunc + 2;
    return mul(pow_series(eisenstein(2, T), 3), invert(delta_normalized(T)));
}

TruncatedSeries f_series(long trunc) {
    if (trunc < 1) throw OutOfRange("f_series: truncation order must be >= 1");
    long T = trunc + 2;
    return mul(mul(eisenstein(2, T), eisenstein(3, T)), invert(delta_normalized(T)));
}

bool quasimodular_check_F_g(long g, long trunc) {
    if (g < 0) throw OutOfRange("quasimodular_check_F_g: g must be >= 0");
    long T = trunc + 2;
    TruncatedSeries lhs = shift(gbl_series(g, T).series, -1);
    TruncatedSeries rhs = mul(pow_series(scalar_mul(make_rational(-1, 24), dlog_operator(eisenstein(1, T))), g),
                              invert(delta_normalized(T)));
    for (long e = -1; e < trunc; ++e)
        if (lhs.at(e) != rhs.at(e)) return false;
    return true;
}

}  // namespace k3
