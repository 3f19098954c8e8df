#include "detmult/degree_matrix.hpp"

#include <algorithm>
#include <functional>

namespace detmult {

DegreeMatrix::DegreeMatrix(std::vector<long long> a, std::vector<long long> b)
    : a_(std::move(a)), b_(std::move(b)) {}

DegreeMatrix DegreeMatrix::from_vectors(std::vector<long long> cols,
                                        std::vector<long long> rows) {
    if (rows.empty()) {
        throw validation_error("row degree sequence must be nonempty");
    }
    if (cols.size() < rows.size()) {
        throw validation_error("need at least as many columns as rows");
    }
    std::sort(cols.begin(), cols.end());
    std::sort(rows.begin(), rows.end(), std::greater<>());
    if (cols.front() - rows.front() < 1) {
        throw validation_error("band positivity fails: a_1 - b_1 < 1");
    }
    return DegreeMatrix(std::move(cols), std::move(rows));
}

DegreeMatrix DegreeMatrix::from_full_matrix(
    const std::vector<std::vector<long long>>& grid) {
    if (grid.empty() || grid.front().empty()) {
        throw validation_error("degree grid must be nonempty");
    }
    const std::size_t t = grid.size();
    const std::size_t ncols = grid.front().size();
    for (const auto& row : grid) {
        if (row.size() != ncols) {
            throw validation_error("degree grid rows have unequal lengths");
        }
    }
    if (ncols < t) {
        throw validation_error("need at least as many columns as rows");
    }
    // Rank-1 test: u[j][i] = a_j - b_i forces u[j][i] - u[0][i] independent
    // of i.  Checking against row/column 0 covers all index pairs.
    for (std::size_t j = 1; j < t; ++j) {
        for (std::size_t i = 1; i < ncols; ++i) {
            if (grid[j][i] + grid[0][0] != grid[j][0] + grid[0][i]) {
                throw validation_error("degree grid fails additive consistency");
            }
        }
    }
    // Note: grid is indexed [row i][column j]; b_t = 0 gives a_j = u[t][j].
    std::vector<long long> a(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
        a[j] = grid[t - 1][j];
    }
    std::vector<long long> b(t);
    for (std::size_t i = 0; i < t; ++i) {
        b[i] = grid[t - 1][0] - grid[i][0];
    }
    if (!std::is_sorted(a.begin(), a.end())) {
        throw validation_error("degree grid is not nondecreasing along rows");
    }
    if (!std::is_sorted(b.begin(), b.end(), std::greater<>())) {
        throw validation_error("degree grid is not nondecreasing down columns");
    }
    if (a.front() - b.front() < 1) {
        throw validation_error("band positivity fails: a_1 - b_1 < 1");
    }
    return DegreeMatrix(std::move(a), std::move(b));
}

long long DegreeMatrix::entry(int j, int i) const {
    if (j < 1 || j > num_cols() || i < 1 || i > t()) {
        throw validation_error("entry index out of range");
    }
    return a_[j - 1] - b_[i - 1];
}

DegreeMatrix DegreeMatrix::canonicalize() const {
    const long long shift = b_.back();
    if (shift == 0) {
        return *this;
    }
    std::vector<long long> a(a_);
    std::vector<long long> b(b_);
    for (auto& v : a) v -= shift;
    for (auto& v : b) v -= shift;
    return DegreeMatrix(std::move(a), std::move(b));
}

DegreeMatrix DegreeMatrix::delete_last_col_row() const {
    if (t() < 2) {
        throw validation_error("cannot delete a row from a single-row matrix");
    }
    return DegreeMatrix({a_.begin(), a_.end() - 1}, {b_.begin(), b_.end() - 1});
}

DegreeMatrix DegreeMatrix::delete_last_col() const {
    if (c() < 2) {
        throw validation_error("cannot delete a column at codimension 1");
    }
    return DegreeMatrix({a_.begin(), a_.end() - 1}, b_);
}

DegreeMatrix DegreeMatrix::delete_first_col_row() const {
    if (t() < 2) {
        throw validation_error("cannot delete a row from a single-row matrix");
    }
    return DegreeMatrix({a_.begin() + 1, a_.end()}, {b_.begin() + 1, b_.end()});
}

DegreeMatrix DegreeMatrix::delete_first_col() const {
    if (c() < 2) {
        throw validation_error("cannot delete a column at codimension 1");
    }
    return DegreeMatrix({a_.begin() + 1, a_.end()}, b_);
}

} // namespace detmult
