#include "k3/series.hpp"

#include <algorithm>
#include <vector>

namespace k3 {

namespace {

// Generalized binomial coefficient C(e, k) for integer e (possibly negative).
Integer binom_any(long e, long k) {
    if (k < 0) return 0;
    if (e >= 0) {
        if (k > e) return 0;
        Integer r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
        return r;
    }
    // C(e, k) = (-1)^k C(-e+k-1, k)
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(-e + k - 1), static_cast<unsigned long>(k));
    return (k % 2 == 0) ? r : Integer(-r);
}

}  // namespace

TruncatedSeries::TruncatedSeries(const Rational& constant) {
    if (constant != 0) coeffs_[0] = constant;
}

TruncatedSeries TruncatedSeries::zero(long trunc) {
    TruncatedSeries s;
    s.trunc_ = trunc;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, long exponent, long trunc) {
    TruncatedSeries s;
    s.trunc_ = trunc;
    if (c != 0 && exponent < trunc) s.coeffs_[exponent] = c;
    return s;
}

TruncatedSeries TruncatedSeries::from_coeffs(std::map<long, Rational> coeffs, long trunc) {
    TruncatedSeries s;
    s.trunc_ = trunc;
    for (auto& [e, c] : coeffs)
        if (c != 0 && e < trunc) s.coeffs_.emplace(e, std::move(c));
    return s;
}

Rational TruncatedSeries::at(long exponent) const {
    if (exponent >= trunc_)
        throw OutOfRange("coefficient of exponent " + std::to_string(exponent) +
                         " requested beyond truncation order " + std::to_string(trunc_));
    return coeff(exponent);
}

Rational TruncatedSeries::coeff(long exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    long T = std::min(a.trunc(), b.trunc());
    std::map<long, Rational> out = a.coeffs();
    for (const auto& [e, c] : b.coeffs()) {
        auto [it, inserted] = out.emplace(e, c);
        if (!inserted) it->second += c;
    }
    return TruncatedSeries::from_coeffs(std::move(out), T);
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, neg(b)); }

TruncatedSeries neg(const TruncatedSeries& a) {
    std::map<long, Rational> out;
    for (const auto& [e, c] : a.coeffs()) out.emplace(e, -c);
    return TruncatedSeries::from_coeffs(std::move(out), a.trunc());
}

TruncatedSeries scalar_mul(const Rational& c, const TruncatedSeries& a) {
    if (c == 0) return TruncatedSeries();
    std::map<long, Rational> out;
    for (const auto& [e, v] : a.coeffs()) out.emplace(e, c * v);
    return TruncatedSeries::from_coeffs(std::move(out), a.trunc());
}

namespace {

long mul_trunc(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(sat_add(a.trunc(), b.min_exp()), sat_add(b.trunc(), a.min_exp()));
}

TruncatedSeries mul_sparse(const TruncatedSeries& a, const TruncatedSeries& b, long T) {
    std::map<long, Rational> out;
    for (const auto& [ea, ca] : a.coeffs())
        for (const auto& [eb, cb] : b.coeffs()) {
            long e = ea + eb;
            if (e >= T) continue;
            auto [it, inserted] = out.emplace(e, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    return TruncatedSeries::from_coeffs(std::move(out), T);
}

}  // namespace

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    long T = mul_trunc(a, b);
    if (a.is_zero() || b.is_zero()) return TruncatedSeries::zero(T);
    if (T >= kExact) return mul_sparse(a, b, T);  // exact polynomial operands

    long lo = a.min_exp() + b.min_exp();
    long n = T - lo;
    if (n <= 0) return TruncatedSeries::zero(T);

    std::vector<std::pair<long, Rational>> ta(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> acc(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
        long e = lo + i;
        Rational sum = 0;
        for (const auto& [ea, ca] : ta) {
            if (ea > e - b.min_exp()) break;
            auto it = b.coeffs().find(e - ea);
            if (it != b.coeffs().end()) sum += ca * it->second;
        }
        acc[static_cast<size_t>(i)] = std::move(sum);
    }
    std::map<long, Rational> out;
    for (long i = 0; i < n; ++i)
        if (acc[static_cast<size_t>(i)] != 0) out.emplace(lo + i, std::move(acc[static_cast<size_t>(i)]));
    return TruncatedSeries::from_coeffs(std::move(out), T);
}

namespace reference {

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    return mul_sparse(a, b, mul_trunc(a, b));
}

}  // namespace reference

TruncatedSeries invert(const TruncatedSeries& a, long trunc) {
    if (a.is_zero())
        throw ZeroLeadingCoefficient("invert: series is zero to working precision");
    long v = a.min_exp();
    long native = a.trunc() >= kExact ? kExact : a.trunc() - 2 * v;
    long T = std::min(native, trunc);
    if (T >= kExact) {
        if (a.coeffs().size() == 1)
            return TruncatedSeries::monomial(Rational(1) / a.coeffs().begin()->second, -v);
        throw Error("invert: exact non-monomial input requires an explicit truncation order");
    }
    long n = T + v;  // number of unit-part coefficients; result exponents in [-v, T)
    if (n <= 0) return TruncatedSeries::zero(T);

    std::vector<Rational> A(static_cast<size_t>(n)), B(static_cast<size_t>(n));
    for (const auto& [e, c] : a.coeffs())
        if (e - v < n) A[static_cast<size_t>(e - v)] = c;
    B[0] = Rational(1) / A[0];
    for (long k = 1; k < n; ++k) {
        Rational s = 0;
        for (long i = 1; i <= k; ++i)
            if (A[static_cast<size_t>(i)] != 0) s += A[static_cast<size_t>(i)] * B[static_cast<size_t>(k - i)];
        B[static_cast<size_t>(k)] = -s * B[0];
    }
    std::map<long, Rational> out;
    for (long k = 0; k < n; ++k)
        if (B[static_cast<size_t>(k)] != 0) out.emplace(k - v, std::move(B[static_cast<size_t>(k)]));
    return TruncatedSeries::from_coeffs(std::move(out), T);
}

TruncatedSeries exp_series(const TruncatedSeries& a, long trunc) {
    for (const auto& [e, c] : a.coeffs())
        if (e <= 0)
            throw NonzeroConstantTerm("exp_series: argument must have strictly positive valuation");
    long T = std::min(a.trunc(), trunc);
    if (a.is_zero()) return truncate(TruncatedSeries(Rational(1)), T);
    if (T >= kExact)
        throw Error("exp_series: exact nonzero input requires an explicit truncation order");

    TruncatedSeries at = truncate(a, T);
    TruncatedSeries acc(Rational(1));
    acc = truncate(acc, T);
    TruncatedSeries term(Rational(1));
    long v = at.min_exp();
    for (long j = 1; j * v < T; ++j) {
        term = truncate(scalar_mul(make_rational(1, j), mul(term, at)), T);
        if (term.is_zero()) break;
        acc = add(acc, term);
    }
    return acc;
}

TruncatedSeries product_form(const std::function<long(long)>& expnt, long trunc) {
    if (trunc < 1) throw OutOfRange("product_form: truncation order must be >= 1");
    TruncatedSeries acc = truncate(TruncatedSeries(Rational(1)), trunc);
    for (long n = 1; n < trunc; ++n) {
        long e = expnt(n);
        if (e == 0) continue;
        std::map<long, Rational> f;
        for (long k = 0; n * k < trunc; ++k) {
            // coefficient of q^{nk} in (1 - q^n)^e
            Integer c = binom_any(e, k);
            if (k % 2 != 0) c = -c;
            if (c != 0) f.emplace(n * k, Rational(c));
            if (e >= 0 && k >= e) break;
        }
        acc = mul(acc, TruncatedSeries::from_coeffs(std::move(f), trunc));
    }
    return acc;
}

TruncatedSeries dlog_operator(const TruncatedSeries& a) {
    std::map<long, Rational> out;
    for (const auto& [e, c] : a.coeffs())
        if (e != 0) out.emplace(e, Rational(e) * c);
    return TruncatedSeries::from_coeffs(std::move(out), a.trunc());
}

TruncatedSeries substitute_power(const TruncatedSeries& a, long d) {
    if (d < 1) throw OutOfRange("substitute_power: d must be >= 1");
    long T = a.trunc() >= kExact ? kExact : d * (a.trunc() - 1) + 1;
    std::map<long, Rational> out;
    for (const auto& [e, c] : a.coeffs()) out.emplace(d * e, c);
    return TruncatedSeries::from_coeffs(std::move(out), T);
}

TruncatedSeries truncate(const TruncatedSeries& a, long trunc) {
    long T = std::min(a.trunc(), trunc);
    std::map<long, Rational> out;
    for (const auto& [e, c] : a.coeffs()) {
        if (e >= T) break;
        out.emplace(e, c);
    }
    return TruncatedSeries::from_coeffs(std::move(out), T);
}

TruncatedSeries shift(const TruncatedSeries& a, long exponent) {
    long T = sat_add(a.trunc(), exponent);
    std::map<long, Rational> out;
    for (const auto& [e, c] : a.coeffs()) out.emplace(e + exponent, c);
    return TruncatedSeries::from_coeffs(std::move(out), T);
}

TruncatedSeries pow_series(const TruncatedSeries& a, long n) {
    if (n < 0) throw OutOfRange("pow_series: exponent must be >= 0");
    TruncatedSeries acc(Rational(1));
    for (long i = 0; i < n; ++i) acc = mul(acc, a);
    return acc;
}

bool equal_on_window(const TruncatedSeries& a, const TruncatedSeries& b, long lo, long hi) {
    if (a.trunc() < hi || b.trunc() < hi)
        throw InsufficientTruncation("equal_on_window: window extends beyond truncation order");
    for (long e = lo; e < hi; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

}  // namespace k3
