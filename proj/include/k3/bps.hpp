#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "k3/biseries.hpp"
#include "k3/series.hpp"

namespace k3 {

// Symmetric Laurent polynomial in y: exponent -> integer coefficient.
using YPoly = std::map<long, Integer>;

// Per-q-degree y-Laurent coefficients of the product
//   prod_{n>=1} 1 / ((1-q^n)^20 (1-y q^n)^2 (1-y^{-1} q^n)^2);
// the q^p coefficient is symmetric under y <-> 1/y with span within [-p, p].
struct YLaurentTable {
    long p_max = 0;
    std::vector<YPoly> coeff;  // index p = 0..p_max
};

// BPS counts r_{g,m}^p.  Only the primitive (m = 1) values are stored;
// imprimitive rows reduce to r_{g,1}^{m^2(p-1)+1} (divisibility invariance),
// with r_0^0 = 1 and r_g^0 = 0 for g > 0 built in.
struct RTable {
    long p_max = 0;
    std::map<std::pair<long, long>, Rational> r1;  // (g, p) -> r_{g,1}^p
    Rational r(long g, long m, long p) const;
};

enum class BernoulliConvention {
    PositiveAbs,     // B_{2g} read as the all-positive values |B_{2g}|
    StandardSigned,  // B_{2g} read in the standard signed convention
};

YLaurentTable kkv_product(long p_max);

// Decompose a symmetric y-Laurent polynomial in the basis s^g with
// s = y - 2 + 1/y, peeling from the top exponent down; throws
// BasisChangeResidual if a nonconstant residue survives (expansion bug).
std::map<long, Integer> s_basis_decompose(const YPoly& poly);

// Expands the product, rewrites each q^p coefficient in the s-basis and
// reads off r_g^p = (-1)^g * (coefficient of s^g).
RTable kkv_table(long p_max);

// True iff the product evaluated at y = 1 equals the rational-curve series
// coefficients up to p_max.
bool kkv_y1_check(long p_max);

std::string render_table2_tsv(long p_max);

// Multiple-cover kernel u^{2g-2} (1/d) (sin(du/2) / (u/2))^{2g-2} as an exact
// series in u (even exponents; the g = 0 kernel starts at u^{-2}).
TruncatedSeries bps_kernel(long g, long d, long u_trunc);

// Expands F^p(u,v) = sum r_{g',m'}^p u^{2g'-2} sum_d (1/d) (...)^{2g'-2} v^{dm'}
// and collects the u^{2g-2} v^m coefficients R_{g,m}^p.
std::map<std::tuple<long, long, long>, Rational> bps_forward(const RTable& r, long p_max,
                                                             long m_max, long g_max);

// Aspinwall-Morrison genus-0 transform N_d = sum_{k|d} k^{-3} n_{d/k} and its
// Moebius inverse.
std::map<long, Rational> genus0_forward(const std::map<long, Rational>& n, long D);
std::map<long, Rational> genus0_invert(const std::map<long, Rational>& N, long D);

// Point-inserted primitive series: expands
//   u^{-2} q/Delta_norm * exp(sum_{g>=1} u^{2g} B_{2g}/(g(2g)!) E_g(q))
//                       * (sum_m q^m sum_{d|m} (m/d) (2 sin(du/2))^2)^k
// and returns (g, p) -> R_{g,k,1}^p.  The Bernoulli reading is calibrated by
// requiring the k = 0 specialization to match the product formula; the
// all-positive reading is the one that passes.
std::map<std::pair<long, long>, Rational> mpt_series(
    long k, long g_max, long p_max,
    BernoulliConvention convention = BernoulliConvention::PositiveAbs);

// The k-th-power factor above, exposed for direct inspection in tests.
BiSeries mpt_cover_factor(long p_max, long g_max);

}  // namespace k3
