// Benchmarks for the two pairs of redundant paths: generating-function DP
// vs direct enumeration for Betti tables, and OpenMP vs serial fuzz
// campaigns.

#include <chrono>
#include <cstdio>
#include <vector>

#include "detmult/conjecture.hpp"
#include "detmult/multiplicity.hpp"

using namespace detmult;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

DegreeMatrix equidegree(int t, int c, long long d) {
    return DegreeMatrix::from_vectors(std::vector<long long>(t + c - 1, d),
                                      std::vector<long long>(t, 0));
}

void bench_betti() {
    std::printf("betti table: DP vs enumeration\n");
    std::printf("%6s %6s %12s %12s\n", "t", "c", "dp [s]", "enum [s]");
    for (const auto& [t, c] : std::vector<std::pair<int, int>>{
             {3, 3}, {5, 5}, {7, 7}, {9, 9}, {11, 8}}) {
        const auto dm = equidegree(t, c, 2);
        auto start = std::chrono::steady_clock::now();
        const auto dp = betti_table(dm);
        const double dpTime = seconds_since(start);

        start = std::chrono::steady_clock::now();
        const auto enumerated = betti_table_enumerated(dm, 100'000'000);
        const double enumTime = seconds_since(start);

        if (dp != enumerated) {
            std::printf("MISMATCH at t=%d c=%d\n", t, c);
            return;
        }
        std::printf("%6d %6d %12.4f %12.4f\n", t, c, dpTime, enumTime);
    }
}

void bench_campaign() {
    FuzzConfig cfg;
    cfg.seed = 42;
    cfg.trials = 2'000;
    cfg.maxT = 6;
    cfg.maxC = 6;
    cfg.maxB = 9;
    cfg.maxGap = 9;

    std::printf("\nfuzz campaign, %u trials: OpenMP vs serial\n", cfg.trials);
    auto start = std::chrono::steady_clock::now();
    const auto parallel = fuzz_campaign(cfg);
    const double parTime = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const auto serial = fuzz_campaign_serial(cfg);
    const double serTime = seconds_since(start);

    if (!summaries_equal(parallel, serial)) {
        std::printf("MISMATCH between parallel and serial summaries\n");
        return;
    }
    std::printf("parallel %.3fs, serial %.3fs, speedup %.2fx\n", parTime,
                serTime, serTime / parTime);
}

} // namespace

int main() {
    bench_betti();
    bench_campaign();
    return 0;
}
