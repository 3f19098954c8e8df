#include "detmult/shifts.hpp"

#include <cassert>
#include <numeric>

namespace detmult {

namespace {

// Band-entry summation, one term per matrix row plus the leading run.
long long min_shift_band(const DegreeMatrix& dm, int i) {
    long long sum = 0;
    for (int k = 1; k <= i; ++k) sum += dm.entry(k, 1);
    for (int k = 2; k <= dm.t(); ++k) sum += dm.entry(i + k - 1, k);
    return sum;
}

long long max_shift_band(const DegreeMatrix& dm, int i) {
    const int t = dm.t();
    const int c = dm.c();
    long long sum = 0;
    for (int k = 1; k <= t; ++k) sum += dm.entry(c - i + k, k);
    for (int k = t + c - i + 1; k <= t + c - 1; ++k) sum += dm.entry(k, t);
    return sum;
}

} // namespace

ShiftVector min_shifts(const DegreeMatrix& dm) {
    const auto& a = dm.col_degrees();
    const auto& b = dm.row_degrees();
    const int t = dm.t();
    const int c = dm.c();
    const long long bsum = std::accumulate(b.begin(), b.end(), 0LL);

    ShiftVector out{ShiftVector::Kind::min, std::vector<long long>(c)};
    long long asum = std::accumulate(a.begin(), a.begin() + t, 0LL);
    for (int i = 1; i <= c; ++i) {
        if (i > 1) asum += a[t + i - 2];
        out.values[i - 1] = asum - bsum - (i - 1) * b.front();
        assert(out.values[i - 1] == min_shift_band(dm, i));
    }
    return out;
}

ShiftVector max_shifts(const DegreeMatrix& dm) {
    const auto& a = dm.col_degrees();
    const auto& b = dm.row_degrees();
    const int t = dm.t();
    const int c = dm.c();
    const long long bsum = std::accumulate(b.begin(), b.end(), 0LL);

    ShiftVector out{ShiftVector::Kind::max, std::vector<long long>(c)};
    long long asum = std::accumulate(a.begin() + (c - 1), a.end(), 0LL);
    for (int i = 1; i <= c; ++i) {
        if (i > 1) asum += a[c - i];
        out.values[i - 1] = asum - bsum - (i - 1) * b.back();
        assert(out.values[i - 1] == max_shift_band(dm, i));
    }
    return out;
}

} // namespace detmult
