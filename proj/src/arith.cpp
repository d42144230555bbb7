#include "k3/arith.hpp"

#include <mutex>
#include <vector>

#include "k3/errors.hpp"

namespace k3 {

Integer sigma(long k, long n) {
    if (n < 1) throw OutOfRange("sigma: n must be >= 1");
    if (k < 0) throw OutOfRange("sigma: k must be >= 0");
    Integer total = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        total += p;
        long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
            total += p;
        }
    }
    return total;
}

Integer partition_count(long n) {
    if (n < 0) throw OutOfRange("partition_count: n must be >= 0");
    static std::vector<Integer> memo{1};
    static std::mutex lock;
    std::scoped_lock guard(lock);
    while (static_cast<long>(memo.size()) <= n) {
        long m = static_cast<long>(memo.size());
        Integer s = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            long g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            Integer term = 0;
            if (g1 <= m) term += memo[static_cast<size_t>(m - g1)];
            if (g2 <= m) term += memo[static_cast<size_t>(m - g2)];
            s += (k % 2 == 1) ? term : -term;
        }
        memo.push_back(s);
    }
    return memo[static_cast<size_t>(n)];
}

Rational bernoulli(long k) {
    if (k < 1) throw OutOfRange("bernoulli: k must be >= 1");
    // Standard recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 over all indices,
    // re-signed at the end to the positive convention.
    static std::vector<Rational> std_memo{1};  // standard B_0, B_1, B_2, ...
    static std::mutex lock;
    std::scoped_lock guard(lock);
    while (static_cast<long>(std_memo.size()) <= 2 * k) {
        long m = static_cast<long>(std_memo.size());
        Rational s = 0;
        for (long j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * std_memo[static_cast<size_t>(j)];
        std_memo.push_back(-s / Rational(m + 1));
    }
    Rational b = std_memo[static_cast<size_t>(2 * k)];
    return (k % 2 == 1) ? b : -b;  // (-1)^{k+1} B_{2k}^{std}, always positive
}

int moebius(long n) {
    if (n < 1) throw OutOfRange("moebius: n must be >= 1");
    int primes = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++primes;
    }
    if (n > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw OutOfRange("binomial: requires 0 <= k <= n");
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace k3
