#pragma once

#include "k3/series.hpp"

namespace k3 {

// Normalized Eisenstein series in the weight-2k indexing
//   E_k = 1 + (-1)^k (4k/B_k) sum_{n>=1} sigma_{2k-1}(n) q^n,
// so E_1 = 1 - 24 sum sigma_1(n) q^n is the quasi-modular weight-2 series and
// E_2, E_3 are the classical weight-4 and weight-6 series:
//   index k:        1    2    3    4    5
//   classical name  E2   E4   E6   E8   E10
TruncatedSeries eisenstein(long k, long trunc);

// q prod_{n>=1} (1 - q^n)^24, the discriminant normalized to leading term q.
TruncatedSeries delta_normalized(long trunc);

// j = E_2^3 / delta_normalized = q^{-1} + 744 + 196884 q + ...
TruncatedSeries j_normalized(long trunc);

// f = E_2 E_3 / delta_normalized = sum c(n) q^n with c(-1) = 1; the Fourier
// coefficients c(n) drive the Harvey-Moore / KML identities.
TruncatedSeries f_series(long trunc);

// Checks q^{-1} F_g = (-(1/24) D E_1)^g / delta_normalized coefficientwise up
// to the given order, where F_g is the genus-g count series normalized so the
// coefficient of q^p is the invariant for arithmetic genus p.
bool quasimodular_check_F_g(long g, long trunc);

}  // namespace k3
