#include "detmult/multiplicity.hpp"

#include <map>
#include <utility>

namespace detmult {

namespace {

using MemoKey = std::pair<std::vector<long long>, std::vector<long long>>;
using Memo = std::map<MemoKey, BigInt>;

// Sum of the main-diagonal degrees: the degree of det(A) when c = 1.
BigInt determinant_degree(const DegreeMatrix& dm) {
    BigInt e = 0;
    for (int k = 1; k <= dm.t(); ++k) {
        e += dm.entry(k, k);
    }
    return e;
}

// Product of the generator degrees in the single row: the complete
// intersection case t = 1.
BigInt complete_intersection_degree(const DegreeMatrix& dm) {
    BigInt e = 1;
    for (int j = 1; j <= dm.num_cols(); ++j) {
        e *= dm.entry(j, 1);
    }
    return e;
}

BigInt linkage_rec(const DegreeMatrix& dm, Memo& memo, bool dual) {
    if (dm.c() == 1) return determinant_degree(dm);
    if (dm.t() == 1) return complete_intersection_degree(dm);

    const DegreeMatrix key = dm.canonicalize();
    MemoKey mk{key.col_degrees(), key.row_degrees()};
    if (auto it = memo.find(mk); it != memo.end()) {
        return it->second;
    }
    BigInt e;
    if (dual) {
        e = linkage_rec(dm.delete_first_col_row(), memo, dual) +
            dm.entry(1, 1) * linkage_rec(dm.delete_first_col(), memo, dual);
    } else {
        e = linkage_rec(dm.delete_last_col_row(), memo, dual) +
            dm.entry(dm.num_cols(), dm.t()) *
                linkage_rec(dm.delete_last_col(), memo, dual);
    }
    memo.emplace(std::move(mk), e);
    return e;
}

} // namespace

BigInt multiplicity_en(const DegreeMatrix& dm) {
    KPolynomial kp = k_polynomial(betti_table(dm));
    std::vector<BigInt> coeff = std::move(kp.coefficients);
    for (int pass = 1; pass <= dm.c(); ++pass) {
        // Synthetic division by (1-z): q_k = -sum_{j > k} n_j and the
        // remainder is N(1).
        std::vector<BigInt> quotient(coeff.empty() ? 0 : coeff.size() - 1);
        BigInt suffix = 0;
        for (std::size_t k = coeff.size(); k-- > 1;) {
            suffix += coeff[k];
            quotient[k - 1] = -suffix;
        }
        BigInt remainder = suffix + (coeff.empty() ? BigInt(0) : coeff[0]);
        if (remainder != 0) {
            throw invariant_violation(
                "K-polynomial not divisible by (1-z) at pass " +
                std::to_string(pass));
        }
        coeff = std::move(quotient);
    }
    BigInt e = 0;
    for (const auto& ck : coeff) e += ck;
    if (e <= 0) {
        throw invariant_violation("multiplicity from K-polynomial is nonpositive");
    }
    return e;
}

BigInt multiplicity_linkage(const DegreeMatrix& dm) {
    Memo memo;
    return linkage_rec(dm, memo, /*dual=*/false);
}

BigInt multiplicity_linkage_dual(const DegreeMatrix& dm) {
    Memo memo;
    return linkage_rec(dm, memo, /*dual=*/true);
}

BigInt multiplicity_pure(long long t, long long c, long long d) {
    if (t < 1 || c < 1 || d < 1) {
        throw validation_error("pure-case parameters must be positive");
    }
    BigInt e = 1;
    for (long long i = 0; i < c; ++i) e *= d;
    return e * binomial(t + c - 1, c);
}

BigInt multiplicity(const DegreeMatrix& dm, MultMethod method) {
    switch (method) {
    case MultMethod::en:
        return multiplicity_en(dm);
    case MultMethod::linkage:
        return multiplicity_linkage(dm);
    case MultMethod::automatic: {
        BigInt en = multiplicity_en(dm);
        BigInt link = multiplicity_linkage(dm);
        if (en != link) {
            throw invariant_violation("multiplicity methods disagree: en=" +
                                      en.str() + " linkage=" + link.str());
        }
        return en;
    }
    }
    throw validation_error("unknown multiplicity method");
}

} // namespace detmult
