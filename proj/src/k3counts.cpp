#include "k3/k3counts.hpp"

#include <algorithm>
#include <sstream>

#include "k3/arith.hpp"

namespace k3 {

TruncatedSeries yau_zaslow_series(long trunc) {
    return product_form([](long) { return -24; }, trunc);
}

GenusSeries gbl_series(long g, long trunc) {
    if (g < 0) throw OutOfRange("gbl_series: g must be >= 0");
    std::map<long, Rational> s;
    for (long n = 1; n < trunc; ++n) s[n] = Rational(n) * Rational(sigma(1, n));
    TruncatedSeries point_factor = TruncatedSeries::from_coeffs(std::move(s), trunc);
    TruncatedSeries f = truncate(mul(pow_series(point_factor, g), yau_zaslow_series(trunc)), trunc);
    return GenusSeries{g, f};
}

CountTable table1(long p_max) {
    if (p_max < 1 || p_max > 18) throw OutOfRange("table1: p_max must be in 1..18");
    CountTable t;
    t.p_max = p_max;
    std::map<long, TruncatedSeries> by_genus;
    for (long p = 1; p <= p_max; ++p) {
        long d_lo = std::max(1L, p - 9);
        long d_hi = std::min(p, 9L);
        for (long d = d_lo; d <= d_hi; ++d) {
            long g = p - d;
            auto it = by_genus.find(g);
            if (it == by_genus.end()) it = by_genus.emplace(g, gbl_series(g, p_max + 1).series).first;
            t.cells[{p, d}] = to_integer(it->second.at(p));
        }
    }
    return t;
}

std::string render_table1_tsv(long p_max) {
    CountTable t = table1(p_max);
    std::ostringstream out;
    out << "p\\delta";
    for (long d = 1; d <= 9; ++d) out << '\t' << d;
    out << '\n';
    for (long p = 1; p <= p_max; ++p) {
        std::string line = std::to_string(p);
        for (long d = 1; d <= 9; ++d) {
            line += '\t';
            auto it = t.cells.find({p, d});
            if (it != t.cells.end()) line += to_string(it->second);
        }
        while (!line.empty() && line.back() == '\t') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

Integer lee_leung_N12(long p) {
    if (p < 1) throw OutOfRange("lee_leung_N12: p must be >= 1");
    TruncatedSeries f1 = gbl_series(1, 4 * p - 2).series;
    return to_integer(f1.at(4 * p - 3)) + 2 * to_integer(f1.at(p));
}

GathmannReport gathmann_check() {
    GathmannReport r;
    TruncatedSeries yz = yau_zaslow_series(6);
    Integer n2 = to_integer(yz.at(2));  // 324 rational curves in the primitive genus-2 class
    r.five_nodal_integral = 70956;      // input constant from relative invariants of the sextic
    r.reducible_pairs = 2 * binomial(n2.get_si(), 2);
    r.reducible_double_covers = 2 * n2;
    r.total = r.five_nodal_integral + r.reducible_pairs + r.reducible_double_covers;
    r.n05 = to_integer(yz.at(5));
    r.pass = (r.total == r.n05);
    return r;
}

long fiber_count(const FiberCountInput& input) {
    return input.e_total - input.e_genfiber * input.e_base;
}

}  // namespace k3
