// Compares the serial reference kernels against their OpenMP counterparts on a
// few representative workloads and checks that both give identical answers.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qpr/matrix.hpp"
#include "qpr/search.hpp"
#include "qpr/sequences.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <class F>
auto timed(const char* label, F&& f) {
    auto t0 = clock_type::now();
    auto result = f();
    std::printf("  %-28s %8.3f s\n", label, seconds_since(t0));
    return result;
}

void bench_qpr(int n, std::uint64_t seed) {
    std::printf("qpr-sequence, random symmetric %dx%d over Q (seed %llu)\n", n, n,
                static_cast<unsigned long long>(seed));
    auto m = qpr::random_symmetric<qpr::Rational>(n, qpr::FieldSpec::rationals(), seed, 9);
    auto serial = timed("serial", [&] { return qpr::compute_qpr(m); });
    auto parallel = timed("parallel", [&] { return qpr::compute_qpr_parallel(m); });
    std::printf("  result %s, match: %s\n\n", serial.c_str(),
                serial == parallel ? "yes" : "NO -- BUG");
}

void bench_survey(std::uint32_t p, int n) {
    std::printf("exhaustive survey over GF(%u), n=%d\n", p, n);
    auto serial = timed("serial", [&] { return qpr::exhaustive_survey(p, n); });
    auto parallel = timed("parallel", [&] { return qpr::exhaustive_survey_parallel(p, n); });
    bool match = serial.realized.size() == parallel.realized.size();
    if (match)
        for (const auto& [seq, e] : serial.realized) {
            auto it = parallel.realized.find(seq);
            if (it == parallel.realized.end() || it->second.count != e.count ||
                it->second.witness_index != e.witness_index) {
                match = false;
                break;
            }
        }
    std::printf("  %llu matrices, %zu sequences, match: %s\n\n",
                static_cast<unsigned long long>(serial.total), serial.realized.size(),
                match ? "yes" : "NO -- BUG");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernels fall back to serial\n\n");
#endif
    bench_qpr(10, 1);
    bench_qpr(12, 2);
    bench_survey(2, 4);
    bench_survey(3, 3);
    return 0;
}
