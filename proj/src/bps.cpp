#include "k3/bps.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "k3/arith.hpp"
#include "k3/k3counts.hpp"
#include "k3/modular.hpp"

namespace k3 {

namespace {

void prune_zeros(YPoly& p) {
    for (auto it = p.begin(); it != p.end();)
        it = (it->second == 0) ? p.erase(it) : std::next(it);
}

YPoly ypoly_mul(const YPoly& a, const YPoly& b) {
    YPoly c;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) c[ea + eb] += ca * cb;
    prune_zeros(c);
    return c;
}

// q-truncated convolution of two per-degree y-Laurent tables.
std::vector<YPoly> mul_tables(const std::vector<YPoly>& a, const std::vector<YPoly>& b, long p_max) {
    std::vector<YPoly> c(static_cast<size_t>(p_max + 1));
    for (long i = 0; i <= p_max; ++i) {
        if (a[static_cast<size_t>(i)].empty()) continue;
        for (long j = 0; i + j <= p_max; ++j) {
            if (b[static_cast<size_t>(j)].empty()) continue;
            YPoly& out = c[static_cast<size_t>(i + j)];
            for (const auto& [ea, ca] : a[static_cast<size_t>(i)])
                for (const auto& [eb, cb] : b[static_cast<size_t>(j)]) out[ea + eb] += ca * cb;
        }
    }
    for (auto& p : c) prune_zeros(p);
    return c;
}

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer int_pow(long base, long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

YLaurentTable kkv_product(long p_max) {
    if (p_max < 0) throw OutOfRange("kkv_product: p_max must be >= 0");
    std::vector<YPoly> cur(static_cast<size_t>(p_max + 1));
    cur[0][0] = 1;
    for (long n = 1; n <= p_max; ++n) {
        std::vector<YPoly> fa(cur.size()), fb(cur.size()), fc(cur.size());
        for (long k = 0; n * k <= p_max; ++k) {
            fa[static_cast<size_t>(n * k)][0] = binomial(k + 19, 19);  // 1/(1-q^n)^20
            fb[static_cast<size_t>(n * k)][k] = k + 1;                 // 1/(1-y q^n)^2
            fc[static_cast<size_t>(n * k)][-k] = k + 1;                // 1/(1-q^n/y)^2
        }
        cur = mul_tables(cur, fa, p_max);
        cur = mul_tables(cur, fb, p_max);
        cur = mul_tables(cur, fc, p_max);
    }
    YLaurentTable t;
    t.p_max = p_max;
    t.coeff = std::move(cur);
    return t;
}

std::map<long, Integer> s_basis_decompose(const YPoly& poly) {
    YPoly work = poly;
    prune_zeros(work);
    std::map<long, Integer> out;
    if (work.empty()) return out;

    long top = std::max(work.rbegin()->first, -work.begin()->first);
    std::vector<YPoly> spow(static_cast<size_t>(top + 1));
    spow[0] = YPoly{{0, 1}};
    const YPoly s{{-1, 1}, {0, -2}, {1, 1}};
    for (long g = 1; g <= top; ++g) spow[static_cast<size_t>(g)] = ypoly_mul(spow[static_cast<size_t>(g - 1)], s);

    for (long g = top; g >= 0; --g) {
        auto it = work.find(g);
        if (it == work.end()) continue;
        Integer a = it->second;
        for (const auto& [e, c] : spow[static_cast<size_t>(g)]) {
            Integer v = work[e] - a * c;
            if (v == 0)
                work.erase(e);
            else
                work[e] = v;
        }
        out.emplace(g, std::move(a));
    }
    if (!work.empty())
        throw BasisChangeResidual("s_basis_decompose: polynomial is not a combination of powers of y - 2 + 1/y");
    return out;
}

Rational RTable::r(long g, long m, long p) const {
    if (g < 0 || m < 1 || p < 0) throw OutOfRange("RTable::r: need g >= 0, m >= 1, p >= 0");
    long pp = (m == 1) ? p : m * m * (p - 1) + 1;  // divisibility invariance
    if (pp < 0) return Rational(0);
    if (pp == 0) return Rational(g == 0 ? 1 : 0);
    if (g > pp) return Rational(0);  // the q^pp coefficient has y-span within [-pp, pp]
    if (pp > p_max)
        throw OutOfRange("RTable::r: genus " + std::to_string(pp) + " beyond table size " + std::to_string(p_max));
    auto it = r1.find({g, pp});
    return it == r1.end() ? Rational(0) : it->second;
}

RTable kkv_table(long p_max) {
    YLaurentTable tab = kkv_product(p_max);
    RTable rt;
    rt.p_max = p_max;
    for (long p = 0; p <= p_max; ++p) {
        for (auto& [g, a] : s_basis_decompose(tab.coeff[static_cast<size_t>(p)])) {
            rt.r1[{g, p}] = Rational((g % 2 != 0) ? Integer(-a) : a);
        }
    }
    return rt;
}

bool kkv_y1_check(long p_max) {
    YLaurentTable tab = kkv_product(p_max);
    TruncatedSeries yz = yau_zaslow_series(p_max + 1);
    for (long p = 0; p <= p_max; ++p) {
        Integer sum = 0;
        for (const auto& [e, c] : tab.coeff[static_cast<size_t>(p)]) sum += c;
        if (Rational(sum) != yz.at(p)) return false;
    }
    return true;
}

std::string render_table2_tsv(long p_max) {
    RTable rt = kkv_table(p_max);
    std::ostringstream out;
    out << "g\\p";
    for (long p = 0; p <= p_max; ++p) out << '\t' << p;
    out << '\n';
    for (long g = 0; g <= p_max; ++g) {
        std::string line = std::to_string(g);
        for (long p = 0; p <= p_max; ++p) {
            line += '\t';
            if (g <= p) line += to_string(to_integer(rt.r(g, 1, p)));
        }
        while (!line.empty() && line.back() == '\t') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

TruncatedSeries bps_kernel(long g, long d, long u_trunc) {
    if (g < 0 || d < 1) throw OutOfRange("bps_kernel: need g >= 0, d >= 1");
    long e = 2 * g - 2;
    long need = std::max(u_trunc - e, 1L);
    if (g == 0) need = sat_add(u_trunc, 2);

    // sin(du/2) / (u/2) = sum_i (-1)^i d^{2i+1} u^{2i} / (4^i (2i+1)!)
    std::map<long, Rational> sc;
    for (long i = 0; 2 * i < need; ++i) {
        Integer num = int_pow(d, 2 * i + 1);
        if (i % 2 != 0) num = -num;
        Integer den = factorial(2 * i + 1) << (2 * i);  // (2i+1)! * 4^i
        sc.emplace(2 * i, make_rational(num, den));
    }
    TruncatedSeries sr = TruncatedSeries::from_coeffs(std::move(sc), need);
    TruncatedSeries body = (g == 0) ? invert(mul(sr, sr)) : pow_series(sr, e);
    return truncate(shift(scalar_mul(make_rational(1, d), body), e), u_trunc);
}

std::map<std::tuple<long, long, long>, Rational> bps_forward(const RTable& rt, long p_max, long m_max,
                                                             long g_max) {
    if (p_max < 0 || m_max < 1 || g_max < 0) throw OutOfRange("bps_forward: need p_max, g_max >= 0 and m_max >= 1");
    long ut = 2 * g_max + 1;
    std::map<std::pair<long, long>, TruncatedSeries> kernels;
    auto kernel = [&](long g, long d) -> const TruncatedSeries& {
        auto it = kernels.find({g, d});
        if (it == kernels.end()) it = kernels.emplace(std::make_pair(g, d), bps_kernel(g, d, ut)).first;
        return it->second;
    };

    std::map<std::tuple<long, long, long>, Rational> out;
    for (long p = 0; p <= p_max; ++p)
        for (long m = 1; m <= m_max; ++m)
            for (long g = 0; g <= g_max; ++g) {
                Rational sum(0);
                for (long d = 1; d <= m; ++d) {
                    if (m % d != 0) continue;
                    for (long gp = 0; gp <= g; ++gp) {
                        Rational rv = rt.r(gp, m / d, p);
                        if (rv == 0) continue;
                        sum += rv * kernel(gp, d).coeff(2 * g - 2);
                    }
                }
                out[{g, m, p}] = std::move(sum);
            }
    return out;
}

std::map<long, Rational> genus0_forward(const std::map<long, Rational>& n, long D) {
    if (D < 1) throw OutOfRange("genus0_forward: D must be >= 1");
    std::map<long, Rational> N;
    for (long d = 1; d <= D; ++d) {
        Rational s(0);
        for (long k = 1; k <= d; ++k) {
            if (d % k != 0) continue;
            auto it = n.find(d / k);
            if (it != n.end()) s += it->second * make_rational(Integer(1), int_pow(k, 3));
        }
        N[d] = std::move(s);
    }
    return N;
}

std::map<long, Rational> genus0_invert(const std::map<long, Rational>& N, long D) {
    if (D < 1) throw OutOfRange("genus0_invert: D must be >= 1");
    std::map<long, Rational> n;
    for (long d = 1; d <= D; ++d) {
        Rational s(0);
        for (long k = 1; k <= d; ++k) {
            if (d % k != 0) continue;
            int mu = moebius(k);
            if (mu == 0) continue;
            auto it = N.find(d / k);
            if (it != N.end()) s += it->second * make_rational(Integer(mu), int_pow(k, 3));
        }
        n[d] = std::move(s);
    }
    return n;
}

BiSeries mpt_cover_factor(long p_max, long g_max) {
    // (2 sin(du/2))^2 = sum_{j>=1} (-1)^{j+1} 2 d^{2j} u^{2j} / (2j)!
    std::map<long, TruncatedSeries> rows;
    for (long j = 1; j <= g_max; ++j) {
        std::map<long, Rational> cf;
        Integer den = factorial(2 * j);
        for (long m = 1; m <= p_max; ++m) {
            Rational s(0);
            for (long d = 1; d <= m; ++d) {
                if (m % d != 0) continue;
                Integer num = 2 * (m / d) * int_pow(d, 2 * j);
                if (j % 2 == 0) num = -num;
                s += make_rational(num, den);
            }
            if (s != 0) cf.emplace(m, std::move(s));
        }
        rows.emplace(2 * j, TruncatedSeries::from_coeffs(std::move(cf), p_max + 1));
    }
    return BiSeries::from_rows(std::move(rows), p_max + 1, 2 * g_max + 1);
}

std::map<std::pair<long, long>, Rational> mpt_series(long k, long g_max, long p_max,
                                                     BernoulliConvention convention) {
    if (k < 0 || g_max < 0 || p_max < 0) throw OutOfRange("mpt_series: need k, g_max, p_max >= 0");
    long t1 = p_max + 1;
    long t2 = 2 * g_max + 1;

    // u^{-2} q (2 pi)^{12} / Delta(q): one exact outer row holding the
    // rational-curve series.
    BiSeries total = BiSeries::row_at(-2, yau_zaslow_series(t1));

    std::map<long, TruncatedSeries> srows;
    for (long g = 1; g <= g_max; ++g) {
        Rational bg = bernoulli(g);
        if (convention == BernoulliConvention::StandardSigned && g % 2 == 0) bg = -bg;
        Rational c = bg * make_rational(Integer(1), Integer(g) * factorial(2 * g));
        srows.emplace(2 * g, scalar_mul(c, eisenstein(g, t1)));
    }
    if (!srows.empty())
        total = bi_mul(total, bi_exp(BiSeries::from_rows(std::move(srows), t1, t2)));

    if (k > 0) {
        BiSeries cover = mpt_cover_factor(p_max, g_max);
        for (long i = 0; i < k; ++i) total = bi_mul(total, cover);
    }

    std::map<std::pair<long, long>, Rational> out;
    for (long g = 0; g <= g_max; ++g)
        for (long p = 0; p <= p_max; ++p) out[{g, p}] = total.at(p, 2 * g - 2);
    return out;
}

}  // namespace k3
