#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "detmult/betti.hpp"
#include "detmult/degree_matrix.hpp"
#include "detmult/shifts.hpp"

namespace detmult {

using BigRat = boost::multiprecision::cpp_rational;

// Verdict on the multiplicity bounds prod m_i / c! <= e <= prod M_i / c!
// for one instance.  All rationals exact.
struct MultiplicityReport {
    BigInt e;
    BigRat lower;
    BigRat upper;
    bool lowerHolds = false;
    bool upperHolds = false;
    BigRat slackLower; // e - lower
    BigRat slackUpper; // upper - e
    ShiftVector m;
    ShiftVector M;
};

MultiplicityReport check_bounds(const DegreeMatrix& dm);

struct FuzzConfig {
    std::uint64_t seed = 0;
    std::uint32_t trials = 1;
    int maxT = 4;
    int maxC = 4;
    long long maxB = 3;
    long long maxGap = 2;
    std::uint64_t enumCap = kDefaultEnumCap;
};

// Counter-based splitmix64; uniform() draws are deterministic given the
// seeding, independent of any standard-library distribution.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // Uniform draw in [lo, hi], hi >= lo.
    long long uniform(long long lo, long long hi);

private:
    std::uint64_t state_;
};

// Derives the per-trial generator state from (seed, trial index), so any
// trial is reproducible in isolation.
SplitMix64 trial_rng(std::uint64_t seed, std::uint32_t trial);

// Draws t in [1, maxT], c in [1, maxC], rows in [0, maxB], and column
// degrees by cumulative gaps in [0, maxGap] above b_1 + 1.  Every draw
// satisfies the DegreeMatrix invariants by construction.
DegreeMatrix random_degree_matrix(SplitMix64& rng, const FuzzConfig& cfg);

// Names of the per-trial checks, in reporting order.
inline constexpr std::array<const char*, 6> kCheckNames = {
    "bounds",          // Thm 3.1: lower <= e <= upper
    "multiplicity",    // en = linkage = linkage_dual
    "shift_relations", // deletion identities for m_i / M_i
    "proof_step",      // m_i >= m_{i+1}(A'), M_i <= M_{i+1}(A'')
    "k_polynomial",    // power sums vanish; (1-z)^c || N(z)
    "betti_enum",      // DP table = enumerated table (under the cap)
};

struct FuzzViolation {
    std::uint64_t seed = 0;
    std::uint32_t trial = 0;
    std::string check;
    std::vector<long long> cols;
    std::vector<long long> rows;

    friend bool operator==(const FuzzViolation&, const FuzzViolation&) = default;
};

struct CampaignSummary {
    std::uint32_t trials = 0;
    std::uint32_t passed = 0; // trials passing every check
    std::array<std::uint32_t, kCheckNames.size()> checkPasses{};
    std::vector<FuzzViolation> violations;
    // Instance minimizing (upper - lower) / e; ties broken lexicographically
    // on (t, c, a, b).
    std::vector<long long> minSlackCols;
    std::vector<long long> minSlackRows;
    BigRat minSlack;
    bool hasMinSlack = false;
};

bool summaries_equal(const CampaignSummary& lhs, const CampaignSummary& rhs);

// Runs the campaign with OpenMP over trials.  The reduction is associative
// and order-independent, so the summary matches the serial reference.
CampaignSummary fuzz_campaign(const FuzzConfig& cfg);

// Serial reference implementation; identical contract and output.
CampaignSummary fuzz_campaign_serial(const FuzzConfig& cfg);

} // namespace detmult
