#pragma once

#include <map>
#include <utility>

#include "k3/biseries.hpp"
#include "k3/series.hpp"

namespace k3 {

// Lattice data of a Noether-Lefschetz query: fiber genus p and intersection
// degrees (d1, d2) with the two line classes.
struct NLQuery {
    long p = 0;
    long d1 = 0;
    long d2 = 0;
};

// Discriminant 2(d1 d2 - p + 1), computed as the literal cofactor expansion of
//   det [[ 0,  1, d1],
//        [ 1,  0, d2],
//        [d1, d2, 2p-2]].
Integer discriminant_delta(const NLQuery& q);

// Noether-Lefschetz number: the coefficient of q^{Delta/2} in -4 E_2 E_3
// (weight 21/2 theta-type series), 0 when Delta < 0 and -4 when Delta = 0.
// trunc < 0 sizes the expansion automatically; an explicit trunc that does not
// reach Delta/2 throws InsufficientTruncation.
Rational nl_number(const NLQuery& q, long trunc = -1);

// j(q1) - j(q2) expanded in the domain |q2| < |q1| < 1: outer row -1 holds the
// constant -1, row 0 holds j(q1) - 744, row n >= 1 the constant -j_n.
BiSeries j_difference(long inner_trunc, long outer_trunc);

// -2 + 2 f(q1) E_2(q2) / (j(q1) - j(q2)); the coefficient of q1^{d1} q2^{d2}
// is d2^3 N^X_{d1, d2} for the STU fibration.
BiSeries kml_rhs(long inner_trunc, long outer_trunc);

// N^X_{d1, d2} for 0 <= d1 <= d1_max, 1 <= d2 <= d2_max.
std::map<std::pair<long, long>, Rational> kml_series(long d1_max, long d2_max);

// Single N^X_{d1, d2}; d2 = 0 has no degree-cubed normalization and throws
// DivisionByZeroDegree.
Rational kml_value(long d1, long d2);

// f(q1) E_2(q2) / (j(q1) - j(q2)) with a caller-supplied numerator series, so
// tests can verify that perturbing f breaks the expansion identity.
BiSeries harvey_moore_lhs(const TruncatedSeries& f_inner, long inner_trunc, long outer_trunc);

// -q1/(q1 - q2) + E_2(q2) - sum_{d,k,l >= 1} l^3 c(kl) q1^{kd} q2^{ld}, built
// directly from the Fourier coefficients c(n) of f.
BiSeries harvey_moore_rhs(long inner_trunc, long outer_trunc);

// Compares the two sides coefficientwise for q2-rows 0..t2 on the inner window
// [-(t2+2), t1].
bool harvey_moore_check(long t1, long t2);

struct PipelineReport {
    long d1 = 0;
    long d2 = 0;
    Rational lhs;          // 2 N^X_{d1, d2} from the heterotic side
    Rational rhs;          // sum_p N_0^p * NL(p, d1, d2) from the curve counts
    Rational ratio;        // lhs / rhs
    Rational calibration;  // the same ratio at the reference pair (1, 1)
    bool pass = false;     // ratio matches the calibration constant
};

// Matches 2 N^X against sum_{p=0}^{d1 d2 + 1} N_0^p NL(p, d1, d2) for a
// coprime pair (throws NotCoprime otherwise); the proportionality constant is
// pinned at (1, 1) and equals 1.
PipelineReport yz_pipeline_check(long d1, long d2);

}  // namespace k3
