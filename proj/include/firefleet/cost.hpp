#pragma once

#include <cstdint>
#include <vector>

namespace firefleet {

/** How to turn the expected retirement count (n + m) * p into an integer. */
enum class RoundingMode { Nearest, Floor, Ceil };

struct CostParams {
    double p = 0.01;         ///< per-drone monthly retirement probability
    int t = 12;              ///< horizon in months
    std::int64_t c = 10000;  ///< unit drone price (currency minor units)
    RoundingMode rounding = RoundingMode::Nearest;

    void validate() const;
};

/** Replacements per month, u = (n + m) * p rounded per `mode` (Nearest ties
    upward). */
int replacements_per_period(int n, int m, double p,
                            RoundingMode mode = RoundingMode::Nearest);

struct CostEstimate {
    int u = 0;
    std::int64_t additional = 0;  ///< u * t * c: replacement spend alone
    std::int64_t total = 0;       ///< (n + m + u * t) * c: fleet plus replacements
};

/** Integer cost arithmetic; total - additional = (n + m) * c always. */
CostEstimate total_costs(int n, int m, int u, const CostParams& params);

struct ReplacementStats {
    double mean = 0.0;      ///< per-period retirements over all trials
    double variance = 0.0;
    std::vector<std::vector<std::uint64_t>> per_period_histogram;  ///< [period][count]
    std::vector<std::uint64_t> pooled_histogram;                   ///< [count]
    std::uint64_t trials = 0;
    int periods = 0;
};

/**
 * Simulates `trials` runs of `periods` months; each month every drone in the
 * constant-size fleet retires independently with probability p and is
 * replaced at month end, so monthly retirement counts are i.i.d.
 * Binomial(fleet, p). Deterministic per seed (one draw per trial-month).
 */
ReplacementStats simulate_replacements(int fleet, double p, int periods,
                                       std::uint64_t trials, std::uint64_t seed);

}  // namespace firefleet
