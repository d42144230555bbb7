#pragma once

#include <vector>

#include "k3/rational.hpp"

namespace k3 {

// Unibranch plane curve germ u^p + v^q = 0 with gcd(p, q) = 1.
struct CoprimeGerm {
    long p = 2;
    long q = 3;
};

struct GermSummary {
    long delta = 0;     // genus drop
    long branches = 1;  // 1 for a coprime germ
    Integer eG;         // Euler number of the punctual compactified Jacobian
    long fiber_mult = 0;
};

// Euler number of the punctual variety attached to the germ:
// binomial(p+q, p) / (p+q).
Integer euler_G(const CoprimeGerm& germ);

// Number of gaps of the numerical semigroup generated by p and q; equals
// (p-1)(q-1)/2, but is computed by gap counting so the closed form stays a
// testable property.
long delta_invariant(const CoprimeGerm& germ);

// Local multiplicity of a singular fiber in an Euler-number count.  The
// worked values (node 1, cusp 2, tacnode 3, ordinary triple point 4) force
// the coefficient 2 on delta: 2*delta - branches + 1.
long fiber_multiplicity(long delta, long branches);

// Product of euler_G over the analytic local branches.
Integer multibranch_euler(const std::vector<CoprimeGerm>& branches);

GermSummary germ_summary(const CoprimeGerm& germ);

}  // namespace k3
