#pragma once

#include <map>
#include <string>
#include <utility>

#include "k3/series.hpp"

namespace k3 {

// Genus-g count series F_g; the coefficient of q^p is the genus-g invariant
// N_g^p of a primitive class of arithmetic genus p, normalized so F_0 is the
// rational-curve series below.  N_g^p = 0 for p < g.
struct GenusSeries {
    long g = 0;
    TruncatedSeries series;
};

struct FiberCountInput {
    long e_total = 0;     // Euler number of the fibered total space
    long e_genfiber = 0;  // Euler number of the generic fiber
    long e_base = 0;      // Euler number of the base curve
};

// Rational-curve counts indexed as printed: rows p = 1..p_max, columns
// delta = p - g with max(1, p-9) <= delta <= min(p, 9).
struct CountTable {
    long p_max = 0;
    std::map<std::pair<long, long>, Integer> cells;  // (p, delta) -> N_{p-delta}^p
};

struct GathmannReport {
    Integer five_nodal_integral;   // irreducible 5-nodal curves (relative-invariant count)
    Integer reducible_pairs;       // 2 per unordered pair of distinct rational curves
    Integer reducible_double_covers;  // 2 per rational curve, reducible source
    Integer total;
    Integer n05;  // rational-curve count at arithmetic genus 5
    bool pass = false;
};

// prod (1 - q^n)^{-24} = 1 + 24q + 324q^2 + 3200q^3 + ...; the coefficient of
// q^p counts rational curves in a primitive class of arithmetic genus p.
TruncatedSeries yau_zaslow_series(long trunc);

// F_g = (sum_{n>=1} n sigma_1(n) q^n)^g * prod (1 - q^m)^{-24}.
GenusSeries gbl_series(long g, long trunc);

CountTable table1(long p_max);
std::string render_table1_tsv(long p_max);

// Genus-1 invariant of the doubled class: N_1^{4p-3} + 2 N_1^p.
Integer lee_leung_N12(long p);

// Assembles the genus-5 decomposition 70956 + 2*C(324,2) + 2*324 from module
// outputs and compares with the rational-curve count 176256.
GathmannReport gathmann_check();

// e_total - e_genfiber * e_base: the total of the fiber multiplicities
// sum_y (e(F_y) - e(F_gen)) in an Euler-number fibration count.
long fiber_count(const FiberCountInput& input);

}  // namespace k3
