#include "detmult/betti.hpp"

#include <numeric>

namespace detmult {

namespace {

using Poly = std::vector<BigInt>; // dense, exponent 0 upward

void add_shifted(Poly& dst, const Poly& src, long long shift) {
    if (dst.size() < src.size() + shift) {
        dst.resize(src.size() + shift);
    }
    for (std::size_t k = 0; k < src.size(); ++k) {
        dst[k + shift] += src[k];
    }
}

// Slices e_0..e_top of prod_j (1 + y z^{a_j}): e_r collects the column
// subsets of size r, graded by total column degree.
std::vector<Poly> elementary_slices(const std::vector<long long>& a, int top) {
    std::vector<Poly> e(top + 1);
    e[0] = {BigInt(1)};
    int seen = 0;
    for (long long deg : a) {
        ++seen;
        for (int r = std::min(top, seen); r >= 1; --r) {
            add_shifted(e[r], e[r - 1], deg);
        }
    }
    return e;
}

// Slices h_0..h_top of prod_i (1 - y z^{b_i})^{-1}: h_r collects the row
// multisets of size r, graded by total row degree.  Requires b_i >= 0.
std::vector<Poly> complete_homogeneous_slices(const std::vector<long long>& b,
                                              int top) {
    std::vector<Poly> h(top + 1);
    h[0] = {BigInt(1)};
    for (long long deg : b) {
        for (int r = 1; r <= top; ++r) {
            add_shifted(h[r], h[r - 1], deg); // h[r-1] already includes deg
        }
    }
    return h;
}

} // namespace

const BigInt& BettiTable::count(int step, long long shift) const {
    static const BigInt zero(0);
    auto s = entries.find(step);
    if (s == entries.end()) return zero;
    auto j = s->second.find(shift);
    return j == s->second.end() ? zero : j->second;
}

BigInt BettiTable::step_total(int step) const {
    BigInt total = 0;
    if (auto s = entries.find(step); s != entries.end()) {
        for (const auto& [shift, n] : s->second) total += n;
    }
    return total;
}

long long BettiTable::min_shift(int step) const {
    return entries.at(step).begin()->first;
}

long long BettiTable::max_shift(int step) const {
    return entries.at(step).rbegin()->first;
}

BettiTable betti_table(const DegreeMatrix& dm) {
    const DegreeMatrix cdm = dm.canonicalize();
    const int t = cdm.t();
    const int c = cdm.c();
    const auto& a = cdm.col_degrees();
    const auto& b = cdm.row_degrees();
    const long long bsum = std::accumulate(b.begin(), b.end(), 0LL);

    const auto e = elementary_slices(a, t + c - 1);
    const auto h = complete_homogeneous_slices(b, c - 1);

    BettiTable bt{t, c, {}};
    bt.entries[0][0] = 1;
    for (int s = 1; s <= c; ++s) {
        const Poly& cols = e[t + s - 1];
        const Poly& rows = h[s - 1];
        auto& step = bt.entries[s];
        // shift(S, m) = (sum of column degrees) - bsum - (sum of row degrees)
        for (std::size_t p = 0; p < cols.size(); ++p) {
            if (cols[p] == 0) continue;
            for (std::size_t q = 0; q < rows.size(); ++q) {
                if (rows[q] == 0) continue;
                step[static_cast<long long>(p) - bsum - static_cast<long long>(q)] +=
                    cols[p] * rows[q];
            }
        }
    }
    return bt;
}

BettiTable betti_table_enumerated(const DegreeMatrix& dm, std::uint64_t cap) {
    const DegreeMatrix cdm = dm.canonicalize();
    const int t = cdm.t();
    const int c = cdm.c();
    const int ncols = t + c - 1;
    const auto& a = cdm.col_degrees();
    const auto& b = cdm.row_degrees();
    const long long bsum = std::accumulate(b.begin(), b.end(), 0LL);

    BigInt total = 0;
    for (int s = 1; s <= c; ++s) {
        total += binomial(ncols, t + s - 1) * binomial(t + s - 2, s - 1);
    }
    if (total > cap) {
        throw validation_error("enumeration cap exceeded: " + total.str() +
                               " generators > cap " + std::to_string(cap));
    }

    BettiTable bt{t, c, {}};
    bt.entries[0][0] = 1;
    for (int s = 1; s <= c; ++s) {
        auto& step = bt.entries[s];
        // Column subsets of size t+s-1, as sorted index vectors.
        std::vector<int> sub(t + s - 1);
        std::iota(sub.begin(), sub.end(), 0);
        const int k = t + s - 1;
        bool more = true;
        while (more) {
            long long colsum = 0;
            for (int idx : sub) colsum += a[idx];
            // Row multisets of size s-1, as nondecreasing index vectors.
            std::vector<int> mul(s - 1, 0);
            bool moreMul = true;
            while (moreMul) {
                long long rowsum = 0;
                for (int idx : mul) rowsum += b[idx];
                step[colsum - bsum - rowsum] += 1;
                moreMul = false;
                for (int pos = s - 2; pos >= 0; --pos) {
                    if (mul[pos] < t - 1) {
                        const int next = mul[pos] + 1;
                        for (int q = pos; q < s - 1; ++q) mul[q] = next;
                        moreMul = true;
                        break;
                    }
                }
            }
            more = false;
            for (int pos = k - 1; pos >= 0; --pos) {
                if (sub[pos] < ncols - (k - pos)) {
                    ++sub[pos];
                    for (int q = pos + 1; q < k; ++q) sub[q] = sub[q - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    return bt;
}

KPolynomial k_polynomial(const BettiTable& bt) {
    long long maxShift = 0;
    for (const auto& [s, row] : bt.entries) {
        if (!row.empty()) maxShift = std::max(maxShift, row.rbegin()->first);
    }
    KPolynomial kp{std::vector<BigInt>(maxShift + 1)};
    for (const auto& [s, row] : bt.entries) {
        const int sign = (s % 2 == 0) ? 1 : -1;
        for (const auto& [shift, n] : row) {
            kp.coefficients[shift] += sign * n;
        }
    }
    return kp;
}

std::vector<BigInt> total_betti_counts(const DegreeMatrix& dm) {
    const int t = dm.t();
    const int c = dm.c();
    std::vector<BigInt> out(c);
    for (int s = 1; s <= c; ++s) {
        out[s - 1] = binomial(t + c - 1, t + s - 1) * binomial(t + s - 2, s - 1);
    }
    return out;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

} // namespace detmult
