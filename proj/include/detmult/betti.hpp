#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "detmult/degree_matrix.hpp"

namespace detmult {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

// Graded Betti numbers of the Eagon-Northcott resolution of R/I.
// entries[s][j] = number of degree-j generators at homological step s;
// step 0 is R itself, entries[0] = {0: 1}.
struct BettiTable {
    int t = 0;
    int c = 0;
    std::map<int, std::map<long long, BigInt>> entries;

    const BigInt& count(int step, long long shift) const;
    BigInt step_total(int step) const;
    long long min_shift(int step) const;
    long long max_shift(int step) const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// Numerator N(z) = sum_s (-1)^s sum_j beta_{s,j} z^j of the Hilbert series.
// coefficients[k] is the coefficient of z^k.
struct KPolynomial {
    std::vector<BigInt> coefficients;

    friend bool operator==(const KPolynomial&, const KPolynomial&) = default;
};

// Graded ranks via generating-function coefficient extraction: the degree
// (t+s-1) elementary-symmetric slice over the column degrees convolved with
// the degree (s-1) complete-homogeneous slice over the row degrees.
// Polynomial in t, c and the degree spread; never enumerates generators.
BettiTable betti_table(const DegreeMatrix& dm);

// Same table by direct enumeration of (column subset, row multiset) pairs.
// Reference path for testing; throws validation_error when the total
// generator count exceeds cap.
BettiTable betti_table_enumerated(const DegreeMatrix& dm,
                                  std::uint64_t cap = kDefaultEnumCap);

KPolynomial k_polynomial(const BettiTable& bt);

// (beta_1, ..., beta_c) with beta_s = C(t+c-1, t+s-1) * C(t+s-2, s-1).
std::vector<BigInt> total_betti_counts(const DegreeMatrix& dm);

BigInt binomial(long long n, long long k);

} // namespace detmult
