#include <doctest.h>

#include "detmult/conjecture.hpp"
#include "detmult/multiplicity.hpp"
#include "detmult/shifts.hpp"

using detmult::BigInt;
using detmult::DegreeMatrix;
using detmult::MultMethod;

namespace {

DegreeMatrix equidegree(int t, int c, long long d) {
    return DegreeMatrix::from_vectors(std::vector<long long>(t + c - 1, d),
                                      std::vector<long long>(t, 0));
}

} // namespace

TEST_CASE("multiplicity via K-polynomial division") {
    CHECK(detmult::multiplicity_en(DegreeMatrix::from_vectors({1, 1, 2}, {0, 0})) == 5);
    CHECK(detmult::multiplicity_en(DegreeMatrix::from_vectors({5}, {0})) == 5);
    CHECK(detmult::multiplicity_en(equidegree(2, 3, 1)) == 4);
}

TEST_CASE("multiplicity via linkage recursions") {
    const auto dm = DegreeMatrix::from_vectors({1, 1, 2}, {0, 0});
    CHECK(detmult::multiplicity_linkage(dm) == 5);
    CHECK(detmult::multiplicity_linkage_dual(dm) == 5);

    CHECK(detmult::multiplicity_linkage(DegreeMatrix::from_vectors({2, 3, 4}, {0})) == 24);
    CHECK(detmult::multiplicity_linkage(equidegree(3, 2, 2)) == 24);
    CHECK(detmult::multiplicity_linkage_dual(DegreeMatrix::from_vectors({5}, {0})) == 5);
    CHECK(detmult::multiplicity_linkage_dual(equidegree(2, 2, 1)) == 3);
}

TEST_CASE("pure closed form") {
    CHECK(detmult::multiplicity_pure(2, 3, 1) == 4);
    CHECK(detmult::multiplicity_pure(1, 1, 7) == 7);
    CHECK(detmult::multiplicity_pure(4, 3, 2) == 160);
    CHECK(detmult::multiplicity_pure(4, 3, 2) ==
          detmult::multiplicity_en(equidegree(4, 3, 2)));
    CHECK_THROWS_AS(detmult::multiplicity_pure(0, 1, 1), detmult::validation_error);
}

TEST_CASE("dispatch") {
    const auto dm = DegreeMatrix::from_vectors({1, 1, 2}, {0, 0});
    CHECK(detmult::multiplicity(dm, MultMethod::automatic) == 5);
    CHECK(detmult::multiplicity(dm, MultMethod::en) == 5);
    CHECK(detmult::multiplicity(dm, MultMethod::linkage) == 5);
}

TEST_CASE("method agreement and recursion monotonicity on random instances") {
    detmult::FuzzConfig cfg;
    cfg.maxT = 5;
    cfg.maxC = 5;
    cfg.maxB = 5;
    cfg.maxGap = 4;
    for (std::uint32_t trial = 0; trial < 150; ++trial) {
        auto rng = detmult::trial_rng(19, trial);
        const auto dm = detmult::random_degree_matrix(rng, cfg);
        const BigInt e = detmult::multiplicity_en(dm);
        CHECK(e == detmult::multiplicity_linkage(dm));
        CHECK(e == detmult::multiplicity_linkage_dual(dm));
        CHECK(e == detmult::multiplicity_en(dm.canonicalize()));

        if (dm.t() >= 2) {
            CHECK(e > detmult::multiplicity_linkage(dm.delete_last_col_row()));
        }
        if (dm.c() >= 2) {
            CHECK(e > detmult::multiplicity_linkage(dm.delete_last_col()));
        }

        // Huneke-Miller: pure resolutions give c! * e = prod m_i.
        const auto m = detmult::min_shifts(dm).values;
        const auto M = detmult::max_shifts(dm).values;
        if (m == M) {
            BigInt prod = 1, fact = 1;
            for (int i = 0; i < dm.c(); ++i) {
                prod *= m[i];
                fact *= i + 1;
            }
            CHECK(fact * e == prod);
        }
    }
}

TEST_CASE("equidegree instances match the closed form") {
    for (int t = 1; t <= 4; ++t) {
        for (int c = 1; c <= 4; ++c) {
            for (long long d = 1; d <= 3; ++d) {
                CHECK(detmult::multiplicity(equidegree(t, c, d)) ==
                      detmult::multiplicity_pure(t, c, d));
            }
        }
    }
}
