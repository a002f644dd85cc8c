#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace firefleet {

/** Whether larger indicator values mean more fire-prone (Benefit) or less
    (Cost). */
enum class Orientation { Benefit, Cost };

/** Per-zone indicator observations, one row per zone. */
struct IndicatorTable {
    std::vector<std::string> indicator_names;
    std::vector<Orientation> orientations;
    std::vector<std::string> zones;
    std::vector<std::vector<double>> values;  ///< [zone][indicator]

    void validate() const;
};

struct AhpResult {
    std::vector<double> weights;      ///< principal eigenvector, sums to 1
    double lambda_max = 0.0;          ///< principal eigenvalue
    double consistency_ratio = 0.0;   ///< (lambda_max - n)/((n - 1) * RI_n)
    bool consistent = true;           ///< false when the ratio exceeds 0.1
};

/**
 * Indicator weights from a positive reciprocal pairwise-judgment matrix
 * (sizes 2 through 9): power iteration to 1e-12 for the principal
 * eigenvector, consistency ratio against the standard random-index table.
 * An inconsistent matrix (ratio > 0.1) is returned with `consistent` false
 * rather than rejected; a non-reciprocal one throws.
 */
AhpResult ahp_weights(const std::vector<std::vector<double>>& pairwise);

struct GreyScore {
    std::string zone;
    double score = 0.0;                ///< weighted relational degree r_i in (0, 1]
    std::vector<double> coefficients;  ///< per-indicator relational coefficient
};

struct GraResult {
    std::vector<GreyScore> ranked;         ///< descending score, name-lexicographic ties
    std::vector<bool> degenerate_columns;  ///< constant indicator columns (coefficient fixed at 1)
};

/**
 * Grey relational scores against the ideal zone. Each indicator is min-max
 * normalized onto [0, 1] with its orientation applied, so the ideal series is
 * identically 1. With deviations delta = |normalized - 1|:
 *
 *   coefficient = (delta_min + rho * delta_max) / (delta + rho * delta_max)
 *
 * where delta_min/delta_max range over all zones and non-degenerate
 * indicators, and score_i = sum_k weight_k * coefficient_i(k).
 */
GraResult gra_scores(const IndicatorTable& table, const std::vector<double>& weights,
                     double rho);

/** Top-k zone names from a descending score list; ties are already resolved
    lexicographically by gra_scores. */
std::vector<std::string> select_targets(const std::vector<GreyScore>& ranked, std::size_t k);

}  // namespace firefleet
