// Timing comparison of the parallel series kernels against the serial
// reference implementation on curve-count-sized inputs.
#include <chrono>
#include <cstdio>
#include <functional>

#include "k3/k3counts.hpp"
#include "k3/series.hpp"

using namespace k3;
using clock_type = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& body) {
    auto start = clock_type::now();
    body();
    auto stop = clock_type::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
    std::printf("%8s %14s %14s %9s\n", "order", "parallel (ms)", "serial (ms)", "speedup");
    for (long T : {200L, 400L, 800L}) {
        TruncatedSeries a = yau_zaslow_series(T);
        TruncatedSeries b = shift(a, -3);  // a Laurent operand of the same size
        TruncatedSeries pr, sr;
        double tp = time_ms([&] { pr = mul(a, b); });
        double ts = time_ms([&] { sr = reference::mul(a, b); });
        bool same = pr.trunc() == sr.trunc() && pr.coeffs() == sr.coeffs();
        std::printf("%8ld %14.2f %14.2f %8.2fx %s\n", T, tp, ts, ts / tp,
                    same ? "" : "MISMATCH");
    }
    return 0;
}
