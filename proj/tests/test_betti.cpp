#include <doctest.h>

#include "detmult/betti.hpp"
#include "detmult/conjecture.hpp"

using detmult::BettiTable;
using detmult::BigInt;
using detmult::DegreeMatrix;
using detmult::KPolynomial;

namespace {

DegreeMatrix equidegree(int t, int c, long long d) {
    return DegreeMatrix::from_vectors(std::vector<long long>(t + c - 1, d),
                                      std::vector<long long>(t, 0));
}

} // namespace

TEST_CASE("worked Betti tables") {
    const auto dm = DegreeMatrix::from_vectors({1, 1, 2}, {0, 0});
    const auto bt = detmult::betti_table(dm);
    CHECK(bt.count(0, 0) == 1);
    CHECK(bt.count(1, 2) == 1);
    CHECK(bt.count(1, 3) == 2);
    CHECK(bt.count(2, 4) == 2);
    CHECK(bt.entries.size() == 3);
    CHECK(bt.entries.at(1).size() == 2);
    CHECK(bt.entries.at(2).size() == 1);

    const auto principal = detmult::betti_table(DegreeMatrix::from_vectors({5}, {0}));
    CHECK(principal.count(0, 0) == 1);
    CHECK(principal.count(1, 5) == 1);
    CHECK(principal.entries.size() == 2);

    const auto pure = detmult::betti_table(equidegree(2, 2, 1));
    CHECK(pure.count(1, 2) == 3);
    CHECK(pure.count(2, 3) == 2);
}

TEST_CASE("enumerated path matches on the worked examples") {
    for (const auto& dm : {DegreeMatrix::from_vectors({1, 1, 2}, {0, 0}),
                           DegreeMatrix::from_vectors({5}, {0}),
                           equidegree(2, 2, 1)}) {
        CHECK(detmult::betti_table(dm) == detmult::betti_table_enumerated(dm));
    }
}

TEST_CASE("enumeration cap is enforced") {
    CHECK_THROWS_AS(detmult::betti_table_enumerated(equidegree(2, 2, 1), 3),
                    detmult::validation_error);
}

TEST_CASE("total Betti counts") {
    CHECK(detmult::total_betti_counts(equidegree(2, 2, 1)) ==
          std::vector<BigInt>{3, 2});
    CHECK(detmult::total_betti_counts(equidegree(1, 3, 1)) ==
          std::vector<BigInt>{3, 3, 1});
    CHECK(detmult::total_betti_counts(equidegree(1, 1, 1)) ==
          std::vector<BigInt>{1});
}

TEST_CASE("K-polynomial examples") {
    const auto dm = DegreeMatrix::from_vectors({1, 1, 2}, {0, 0});
    CHECK(detmult::k_polynomial(detmult::betti_table(dm)).coefficients ==
          std::vector<BigInt>{1, 0, -1, -2, 2});

    const auto principal = detmult::betti_table(DegreeMatrix::from_vectors({5}, {0}));
    CHECK(detmult::k_polynomial(principal).coefficients ==
          std::vector<BigInt>{1, 0, 0, 0, 0, -1});

    CHECK(detmult::k_polynomial(detmult::betti_table(equidegree(2, 2, 1)))
              .coefficients == std::vector<BigInt>{1, 0, -3, 2});
}

TEST_CASE("table structure on random instances") {
    detmult::FuzzConfig cfg;
    cfg.maxT = 4;
    cfg.maxC = 4;
    cfg.maxB = 4;
    cfg.maxGap = 3;
    for (std::uint32_t trial = 0; trial < 150; ++trial) {
        auto rng = detmult::trial_rng(17, trial);
        const auto dm = detmult::random_degree_matrix(rng, cfg);
        const auto bt = detmult::betti_table(dm);
        const auto totals = detmult::total_betti_counts(dm);

        CHECK(bt == detmult::betti_table_enumerated(dm));
        CHECK(bt == detmult::betti_table(dm.canonicalize()));

        CHECK(static_cast<int>(bt.entries.size()) == dm.c() + 1);
        for (int s = 1; s <= dm.c(); ++s) {
            CHECK(bt.step_total(s) == totals[s - 1]);
            for (const auto& [shift, n] : bt.entries.at(s)) {
                CHECK(n > 0);
            }
        }

        // Power sums of the signed table vanish up to degree c-1.
        for (int k = 0; k < dm.c(); ++k) {
            BigInt sum = 0;
            for (const auto& [s, row] : bt.entries) {
                for (const auto& [shift, n] : row) {
                    BigInt power = 1;
                    for (int p = 0; p < k; ++p) power *= shift;
                    sum += (s % 2 == 0 ? n : -n) * power;
                }
            }
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("equidegree tables are pure") {
    for (int t = 1; t <= 4; ++t) {
        for (int c = 1; c <= 4; ++c) {
            for (long long d = 1; d <= 3; ++d) {
                const auto bt = detmult::betti_table(equidegree(t, c, d));
                for (int s = 1; s <= c; ++s) {
                    CHECK(bt.entries.at(s).size() == 1);
                    CHECK(bt.min_shift(s) == t * d + (s - 1) * d);
                }
            }
        }
    }
}
