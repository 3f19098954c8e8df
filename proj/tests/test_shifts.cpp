#include <doctest.h>

#include "detmult/betti.hpp"
#include "detmult/conjecture.hpp"
#include "detmult/shifts.hpp"

using detmult::DegreeMatrix;
using detmult::max_shifts;
using detmult::min_shifts;

namespace {

DegreeMatrix equidegree(int t, int c, long long d) {
    return DegreeMatrix::from_vectors(std::vector<long long>(t + c - 1, d),
                                      std::vector<long long>(t, 0));
}

} // namespace

TEST_CASE("shift examples") {
    const auto pure = equidegree(3, 4, 2);
    CHECK(min_shifts(pure).values == std::vector<long long>{6, 8, 10, 12});
    CHECK(max_shifts(pure).values == std::vector<long long>{6, 8, 10, 12});

    const auto principal = DegreeMatrix::from_vectors({5}, {0});
    CHECK(min_shifts(principal).values == std::vector<long long>{5});
    CHECK(max_shifts(principal).values == std::vector<long long>{5});

    const auto dm = DegreeMatrix::from_vectors({1, 1, 2}, {0, 0});
    CHECK(min_shifts(dm).values == std::vector<long long>{2, 4});
    CHECK(max_shifts(dm).values == std::vector<long long>{3, 4});
}

TEST_CASE("shift properties on random instances") {
    detmult::FuzzConfig cfg;
    cfg.maxT = 5;
    cfg.maxC = 5;
    cfg.maxB = 6;
    cfg.maxGap = 4;
    for (std::uint32_t trial = 0; trial < 300; ++trial) {
        auto rng = detmult::trial_rng(11, trial);
        const auto dm = detmult::random_degree_matrix(rng, cfg);
        const int t = dm.t();
        const int c = dm.c();
        const auto m = min_shifts(dm).values;
        const auto M = max_shifts(dm).values;

        CHECK(m.front() >= t);
        for (int i = 0; i + 1 < c; ++i) {
            CHECK(m[i] < m[i + 1]);
            CHECK(M[i] < M[i + 1]);
        }
        for (int i = 0; i < c; ++i) CHECK(m[i] <= M[i]);

        // Deletion identities for the shifts.
        if (t >= 2) {
            const auto mPrime = min_shifts(dm.delete_last_col_row()).values;
            const auto MSecond = max_shifts(dm.delete_first_col_row()).values;
            for (int i = 1; i <= c; ++i) {
                CHECK(m[i - 1] == mPrime[i - 1] + dm.entry(t + i - 1, t));
                CHECK(M[i - 1] == MSecond[i - 1] + dm.entry(c - i + 1, 1));
            }
            // Inequalities used in the inductive bound proof.
            for (int i = 1; i <= c - 1; ++i) {
                CHECK(m[i - 1] >= mPrime[i]);
                CHECK(M[i - 1] <= MSecond[i]);
            }
        }
        if (c >= 2) {
            const auto mJ = min_shifts(dm.delete_last_col()).values;
            const auto MK = max_shifts(dm.delete_first_col()).values;
            for (int i = 0; i < c - 1; ++i) {
                CHECK(mJ[i] == m[i]);
                CHECK(MK[i] == M[i]);
            }
        }
    }
}

TEST_CASE("shifts agree with the Betti table extremes") {
    detmult::FuzzConfig cfg;
    cfg.maxT = 4;
    cfg.maxC = 4;
    cfg.maxB = 4;
    cfg.maxGap = 3;
    for (std::uint32_t trial = 0; trial < 100; ++trial) {
        auto rng = detmult::trial_rng(13, trial);
        const auto dm = detmult::random_degree_matrix(rng, cfg);
        const auto bt = detmult::betti_table(dm);
        const auto m = min_shifts(dm).values;
        const auto M = max_shifts(dm).values;
        for (int s = 1; s <= dm.c(); ++s) {
            CHECK(bt.min_shift(s) == m[s - 1]);
            CHECK(bt.max_shift(s) == M[s - 1]);
        }
    }
}
