#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "detmult/errors.hpp"

namespace detmult {

// Degree matrix of a t x (t+c-1) homogeneous matrix, stored as the pair of
// twist sequences: column degrees a_1 <= ... <= a_{t+c-1} and row degrees
// b_1 >= ... >= b_t.  The induced entry grid is u_{j,i} = a_j - b_i; every
// entry is >= 1 (equivalently a_1 - b_1 >= 1).
//
// Immutable after construction; all operations are pure.
class DegreeMatrix {
public:
    // Builds from (possibly unsorted) twist vectors.  Throws validation_error
    // when rows is empty, cols is shorter than rows, or a_1 - b_1 < 1 after
    // sorting.
    static DegreeMatrix from_vectors(std::vector<long long> cols,
                                     std::vector<long long> rows);

    // Reconstructs (a, b) from a full entry grid, normalizing b_t = 0.
    // Throws validation_error when the grid is ragged or empty, fails the
    // additive consistency test u[j][i] + u[j'][i'] = u[j][i'] + u[j'][i],
    // or violates monotonicity / band positivity.
    static DegreeMatrix from_full_matrix(const std::vector<std::vector<long long>>& grid);

    int t() const { return static_cast<int>(b_.size()); }
    int c() const { return static_cast<int>(a_.size() - b_.size()) + 1; }
    int num_cols() const { return static_cast<int>(a_.size()); }

    const std::vector<long long>& col_degrees() const { return a_; }
    const std::vector<long long>& row_degrees() const { return b_; }

    // u_{j,i} = a_j - b_i, 1-based; throws validation_error out of range.
    long long entry(int j, int i) const;

    // Translate so that b_t = 0; every entry is unchanged.
    DegreeMatrix canonicalize() const;

    // A': drop a_{t+c-1} and b_t.  Requires t >= 2.
    DegreeMatrix delete_last_col_row() const;
    // B: drop a_{t+c-1}.  Requires c >= 2.
    DegreeMatrix delete_last_col() const;
    // A'': drop a_1 and b_1.  Requires t >= 2.
    DegreeMatrix delete_first_col_row() const;
    // C: drop a_1.  Requires c >= 2.
    DegreeMatrix delete_first_col() const;

    friend bool operator==(const DegreeMatrix&, const DegreeMatrix&) = default;
    friend auto operator<=>(const DegreeMatrix& lhs, const DegreeMatrix& rhs) {
        if (auto cmp = lhs.a_ <=> rhs.a_; cmp != 0) return cmp;
        return lhs.b_ <=> rhs.b_;
    }

private:
    DegreeMatrix(std::vector<long long> a, std::vector<long long> b);

    std::vector<long long> a_; // ascending
    std::vector<long long> b_; // descending
};

} // namespace detmult
