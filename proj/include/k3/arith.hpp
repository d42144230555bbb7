#pragma once

#include "k3/rational.hpp"

namespace k3 {

// Divisor power sum sigma_k(n) = sum_{d | n} d^k.
Integer sigma(long k, long n);

// Partition number p(n), p(0) = 1; Euler pentagonal-number recurrence.
Integer partition_count(long n);

// Bernoulli numbers in the positive convention fixed by
//   x/(e^x - 1) = 1 - x/2 + sum_{k>=1} (-1)^{k+1} B_k x^{2k}/(2k)!,
// so every B_k is positive (B_1 = 1/6, B_2 = 1/30, ...).  Conversion to the
// standard signed convention happens only where a consumer calibrates it.
Rational bernoulli(long k);

// Moebius function value in {-1, 0, 1}.
int moebius(long n);

// Exact binomial coefficient; requires 0 <= k <= n.
Integer binomial(long n, long k);

}  // namespace k3
