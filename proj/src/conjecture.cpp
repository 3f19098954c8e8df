#include "detmult/conjecture.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "detmult/multiplicity.hpp"

namespace detmult {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long long SplitMix64::uniform(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
}

SplitMix64 trial_rng(std::uint64_t seed, std::uint32_t trial) {
    SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ULL * (trial + 1)));
    return SplitMix64(mixer.next());
}

DegreeMatrix random_degree_matrix(SplitMix64& rng, const FuzzConfig& cfg) {
    const int t = static_cast<int>(rng.uniform(1, cfg.maxT));
    const int c = static_cast<int>(rng.uniform(1, cfg.maxC));
    std::vector<long long> rows(t);
    for (auto& bi : rows) bi = rng.uniform(0, cfg.maxB);
    std::sort(rows.begin(), rows.end(), std::greater<>());
    std::vector<long long> cols(t + c - 1);
    long long prev = rows.front() + 1 + rng.uniform(0, cfg.maxGap);
    cols[0] = prev;
    for (std::size_t k = 1; k < cols.size(); ++k) {
        prev += rng.uniform(0, cfg.maxGap);
        cols[k] = prev;
    }
    return DegreeMatrix::from_vectors(std::move(cols), std::move(rows));
}

MultiplicityReport check_bounds(const DegreeMatrix& dm) {
    MultiplicityReport report;
    report.m = min_shifts(dm);
    report.M = max_shifts(dm);
    report.e = multiplicity(dm, MultMethod::automatic);

    BigInt mProd = 1, MProd = 1, cFact = 1;
    for (int i = 0; i < dm.c(); ++i) {
        mProd *= report.m.values[i];
        MProd *= report.M.values[i];
        cFact *= i + 1;
    }
    report.lower = BigRat(mProd, cFact);
    report.upper = BigRat(MProd, cFact);
    report.lowerHolds = report.lower <= BigRat(report.e);
    report.upperHolds = BigRat(report.e) <= report.upper;
    report.slackLower = BigRat(report.e) - report.lower;
    report.slackUpper = report.upper - BigRat(report.e);
    return report;
}

namespace {

struct TrialResult {
    std::array<bool, kCheckNames.size()> pass;
    BigRat relSlack; // (upper - lower) / e
    std::vector<long long> cols;
    std::vector<long long> rows;
};

bool check_shift_relations(const DegreeMatrix& dm) {
    const auto m = min_shifts(dm).values;
    const auto M = max_shifts(dm).values;
    const int t = dm.t();
    const int c = dm.c();
    if (t >= 2) {
        const auto mPrime = min_shifts(dm.delete_last_col_row()).values;
        const auto MSecond = max_shifts(dm.delete_first_col_row()).values;
        for (int i = 1; i <= c; ++i) {
            if (m[i - 1] != mPrime[i - 1] + dm.entry(t + i - 1, t)) return false;
            if (M[i - 1] != MSecond[i - 1] + dm.entry(c - i + 1, 1)) return false;
        }
    }
    if (c >= 2) {
        const auto mJ = min_shifts(dm.delete_last_col()).values;
        const auto MK = max_shifts(dm.delete_first_col()).values;
        for (int i = 1; i <= c - 1; ++i) {
            if (mJ[i - 1] != m[i - 1]) return false;
            if (MK[i - 1] != M[i - 1]) return false;
        }
    }
    return true;
}

bool check_proof_step(const DegreeMatrix& dm) {
    if (dm.t() < 2) return true;
    const auto m = min_shifts(dm).values;
    const auto M = max_shifts(dm).values;
    const auto mPrime = min_shifts(dm.delete_last_col_row()).values;
    const auto MSecond = max_shifts(dm.delete_first_col_row()).values;
    for (int i = 1; i <= dm.c() - 1; ++i) {
        if (m[i - 1] < mPrime[i]) return false;
        if (M[i - 1] > MSecond[i]) return false;
    }
    return true;
}

bool check_k_polynomial(const DegreeMatrix& dm, const BettiTable& bt) {
    const int c = dm.c();
    // Power sums sum_s (-1)^s sum_j beta_{s,j} j^k vanish for 0 <= k < c.
    for (int k = 0; k < c; ++k) {
        BigInt sum = 0;
        for (const auto& [s, row] : bt.entries) {
            const int sign = (s % 2 == 0) ? 1 : -1;
            for (const auto& [shift, n] : row) {
                BigInt power = 1;
                for (int p = 0; p < k; ++p) power *= shift;
                sum += sign * n * power;
            }
        }
        if (sum != 0) return false;
    }
    // (1-z)^c divides N(z) exactly and (1-z)^{c+1} does not; the quotient
    // at z = 1 is the (positive) multiplicity.
    std::vector<BigInt> coeff = k_polynomial(bt).coefficients;
    for (int pass = 0; pass < c; ++pass) {
        std::vector<BigInt> quotient(coeff.empty() ? 0 : coeff.size() - 1);
        BigInt suffix = 0;
        for (std::size_t k = coeff.size(); k-- > 1;) {
            suffix += coeff[k];
            quotient[k - 1] = -suffix;
        }
        if (suffix + (coeff.empty() ? BigInt(0) : coeff[0]) != 0) return false;
        coeff = std::move(quotient);
    }
    BigInt atOne = 0;
    for (const auto& ck : coeff) atOne += ck;
    return atOne > 0; // nonzero value at 1 means (1-z)^{c+1} does not divide
}

TrialResult run_trial(const FuzzConfig& cfg, std::uint32_t trial) {
    SplitMix64 rng = trial_rng(cfg.seed, trial);
    const DegreeMatrix dm = random_degree_matrix(rng, cfg);

    TrialResult res;
    res.cols = dm.col_degrees();
    res.rows = dm.row_degrees();
    res.pass.fill(false);

    const BettiTable bt = betti_table(dm);
    const BigInt en = multiplicity_en(dm);
    const BigInt link = multiplicity_linkage(dm);
    const BigInt dual = multiplicity_linkage_dual(dm);
    res.pass[1] = (en == link && link == dual);

    const auto m = min_shifts(dm);
    const auto M = max_shifts(dm);
    BigInt mProd = 1, MProd = 1, cFact = 1;
    for (int i = 0; i < dm.c(); ++i) {
        mProd *= m.values[i];
        MProd *= M.values[i];
        cFact *= i + 1;
    }
    const BigRat lower(mProd, cFact);
    const BigRat upper(MProd, cFact);
    res.pass[0] = (lower <= BigRat(en) && BigRat(en) <= upper);
    res.relSlack = (upper - lower) / BigRat(en);

    res.pass[2] = check_shift_relations(dm);
    res.pass[3] = check_proof_step(dm);
    res.pass[4] = check_k_polynomial(dm, bt);

    res.pass[5] = true;
    BigInt generators = 0;
    for (int s = 1; s <= dm.c(); ++s) {
        generators += binomial(dm.num_cols(), dm.t() + s - 1) *
                      binomial(dm.t() + s - 2, s - 1);
    }
    if (generators <= cfg.enumCap) {
        res.pass[5] = (bt == betti_table_enumerated(dm, cfg.enumCap));
    }
    return res;
}

CampaignSummary reduce(const FuzzConfig& cfg, std::vector<TrialResult>& results) {
    CampaignSummary summary;
    summary.trials = cfg.trials;
    for (std::uint32_t trial = 0; trial < cfg.trials; ++trial) {
        TrialResult& res = results[trial];
        bool all = true;
        for (std::size_t k = 0; k < kCheckNames.size(); ++k) {
            if (res.pass[k]) {
                ++summary.checkPasses[k];
            } else {
                all = false;
                summary.violations.push_back(FuzzViolation{
                    cfg.seed, trial, kCheckNames[k], res.cols, res.rows});
            }
        }
        if (all) ++summary.passed;
        // Total tie-break on (t, c, a, b) keeps the reduction order-free.
        const auto tiebreak = [](const std::vector<long long>& cols,
                                 const std::vector<long long>& rows) {
            return std::make_tuple(rows.size(), cols.size() - rows.size(), cols,
                                   rows);
        };
        if (!summary.hasMinSlack || res.relSlack < summary.minSlack ||
            (res.relSlack == summary.minSlack &&
             tiebreak(res.cols, res.rows) <
                 tiebreak(summary.minSlackCols, summary.minSlackRows))) {
            summary.hasMinSlack = true;
            summary.minSlack = res.relSlack;
            summary.minSlackCols = res.cols;
            summary.minSlackRows = res.rows;
        }
    }
    return summary;
}

} // namespace

CampaignSummary fuzz_campaign_serial(const FuzzConfig& cfg) {
    std::vector<TrialResult> results(cfg.trials);
    for (std::uint32_t trial = 0; trial < cfg.trials; ++trial) {
        results[trial] = run_trial(cfg, trial);
    }
    return reduce(cfg, results);
}

CampaignSummary fuzz_campaign(const FuzzConfig& cfg) {
    std::vector<TrialResult> results(cfg.trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long long trial = 0; trial < static_cast<long long>(cfg.trials); ++trial) {
        results[trial] = run_trial(cfg, static_cast<std::uint32_t>(trial));
    }
    return reduce(cfg, results);
}

bool summaries_equal(const CampaignSummary& lhs, const CampaignSummary& rhs) {
    return lhs.trials == rhs.trials && lhs.passed == rhs.passed &&
           lhs.checkPasses == rhs.checkPasses &&
           lhs.violations == rhs.violations &&
           lhs.hasMinSlack == rhs.hasMinSlack &&
           lhs.minSlack == rhs.minSlack &&
           lhs.minSlackCols == rhs.minSlackCols &&
           lhs.minSlackRows == rhs.minSlackRows;
}

} // namespace detmult
