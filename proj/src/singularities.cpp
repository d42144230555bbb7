#include "k3/singularities.hpp"

#include <numeric>
#include <string>

#include "k3/arith.hpp"
#include "k3/errors.hpp"

namespace k3 {

namespace {

void require_coprime(const CoprimeGerm& germ) {
    if (germ.p < 2 || germ.q < 2)
        throw OutOfRange("germ exponents must be >= 2");
    if (std::gcd(germ.p, germ.q) != 1)
        throw NotCoprime("germ exponents (" + std::to_string(germ.p) + "," +
                         std::to_string(germ.q) + ") are not coprime");
}

}  // namespace

Integer euler_G(const CoprimeGerm& germ) {
    require_coprime(germ);
    Integer b = binomial(germ.p + germ.q, germ.p);
    Integer q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t(),
                   static_cast<unsigned long>(germ.p + germ.q));
    if (r != 0) throw Error("euler_G: binomial not divisible by p+q");
    return q;
}

long delta_invariant(const CoprimeGerm& germ) {
    require_coprime(germ);
    long conductor = (germ.p - 1) * (germ.q - 1);  // all n >= conductor are representable
    std::vector<char> reachable(static_cast<size_t>(conductor) + 1, 0);
    reachable[0] = 1;
    for (long gen : {germ.p, germ.q})
        for (long i = gen; i <= conductor; ++i)
            if (reachable[static_cast<size_t>(i - gen)]) reachable[static_cast<size_t>(i)] = 1;
    long gaps = 0;
    for (long i = 1; i < conductor; ++i)
        if (!reachable[static_cast<size_t>(i)]) ++gaps;
    return gaps;
}

long fiber_multiplicity(long delta, long branches) {
    if (delta < 0 || branches < 1) throw OutOfRange("fiber_multiplicity: delta >= 0, branches >= 1");
    return 2 * delta - branches + 1;
}

Integer multibranch_euler(const std::vector<CoprimeGerm>& branches) {
    Integer prod = 1;
    for (const auto& germ : branches) prod *= euler_G(germ);
    return prod;
}

GermSummary germ_summary(const CoprimeGerm& germ) {
    GermSummary s;
    s.delta = delta_invariant(germ);
    s.branches = 1;
    s.eG = euler_G(germ);
    s.fiber_mult = fiber_multiplicity(s.delta, s.branches);
    return s;
}

}  // namespace k3
