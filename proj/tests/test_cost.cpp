#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "firefleet/cost.hpp"

using namespace firefleet;

namespace {

/** Exact Binomial(fleet, p) pmf by the odds recurrence. */
std::vector<double> binomial_pmf(int fleet, double p) {
    std::vector<double> pmf(fleet + 1);
    pmf[0] = std::pow(1.0 - p, fleet);
    const double odds = p / (1.0 - p);
    for (int k = 0; k < fleet; ++k) pmf[k + 1] = pmf[k] * odds * (fleet - k) / (k + 1);
    return pmf;
}

}  // namespace

TEST_CASE("replacements per period under each rounding mode") {
    CHECK(replacements_per_period(514, 76, 0.01) == 6);   // 5.9 -> nearest
    CHECK(replacements_per_period(514, 76, 0.01, RoundingMode::Floor) == 5);
    CHECK(replacements_per_period(514, 76, 0.01, RoundingMode::Ceil) == 6);
    CHECK(replacements_per_period(40, 10, 0.01) == 1);    // 0.5 rounds up (ties away)
    CHECK(replacements_per_period(40, 10, 0.01, RoundingMode::Floor) == 0);
    CHECK(replacements_per_period(200, 0, 0.01) == 2);    // exact integer everywhere
    CHECK(replacements_per_period(200, 0, 0.01, RoundingMode::Floor) == 2);
    CHECK(replacements_per_period(200, 0, 0.01, RoundingMode::Ceil) == 2);
    CHECK_THROWS_AS(replacements_per_period(-1, 0, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(replacements_per_period(1, 0, 1.5), std::invalid_argument);
}

TEST_CASE("integer cost arithmetic") {
    const CostParams params;  // p = 0.01, t = 12, c = 10000
    const CostEstimate estimate = total_costs(514, 76, 6, params);
    CHECK(estimate.u == 6);
    CHECK(estimate.additional == 720000);
    CHECK(estimate.total == 6620000);
    CHECK(estimate.total - estimate.additional == (514 + 76) * 10000);

    // Stays exact at scales where doubles would round.
    CostParams big = params;
    big.c = 1000000007;
    const CostEstimate huge = total_costs(100000, 50000, 1500, big);
    CHECK(huge.total ==
          static_cast<std::int64_t>(100000 + 50000 + 1500 * 12) * 1000000007);
}

TEST_CASE("cost parameter validation") {
    CostParams params;
    params.p = -0.1;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params = CostParams{};
    params.p = 1.1;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params = CostParams{};
    params.t = -1;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params = CostParams{};
    params.c = -1;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    CHECK_THROWS_AS(total_costs(-1, 0, 0, CostParams{}), std::invalid_argument);
    CHECK_THROWS_AS(total_costs(1, 1, -1, CostParams{}), std::invalid_argument);
}

TEST_CASE("simulated retirements match the binomial law") {
    const int fleet = 590;
    const double p = 0.01;
    const ReplacementStats stats = simulate_replacements(fleet, p, 12, 20000, 1);
    CHECK(stats.trials == 20000);
    CHECK(stats.periods == 12);

    // Mean within 4 standard errors of n*p, variance near n*p*(1-p).
    const double draws = 20000.0 * 12.0;
    const double se = std::sqrt(fleet * p * (1.0 - p) / draws);
    CHECK(std::abs(stats.mean - 5.9) <= 4.0 * se);
    CHECK(stats.variance == doctest::Approx(fleet * p * (1.0 - p)).epsilon(0.05));

    // Total-variation distance between the pooled empirical law and the
    // exact binomial pmf.
    const std::vector<double> pmf = binomial_pmf(fleet, p);
    double tv = 0.0;
    for (std::size_t k = 0; k < pmf.size(); ++k) {
        const double observed =
            k < stats.pooled_histogram.size() ? stats.pooled_histogram[k] / draws : 0.0;
        tv += std::abs(observed - pmf[k]);
    }
    tv /= 2.0;
    CHECK(tv < 0.01);

    // Histogram bookkeeping: periods x trials draws in total.
    std::uint64_t total = 0;
    for (std::uint64_t c : stats.pooled_histogram) total += c;
    CHECK(total == 20000ULL * 12ULL);
    REQUIRE(stats.per_period_histogram.size() == 12);
    for (const auto& h : stats.per_period_histogram) {
        std::uint64_t row = 0;
        for (std::uint64_t c : h) row += c;
        CHECK(row == 20000);
    }
}

TEST_CASE("per-period counts are homogeneous (chi-square across periods)") {
    const ReplacementStats stats = simulate_replacements(590, 0.01, 12, 20000, 7);
    // Bin counts 0-3, 4, 5, 6, 7, >= 8 per period and test that every period
    // draws from the same law. df = (6 - 1)(12 - 1) = 55; the 0.05 critical
    // value is 73.311.
    const int edges[] = {4, 5, 6, 7, 8};
    double table[12][6] = {};
    for (int period = 0; period < 12; ++period)
        for (std::size_t k = 0; k < stats.per_period_histogram[period].size(); ++k) {
            int bin = 0;
            while (bin < 5 && static_cast<int>(k) >= edges[bin]) ++bin;
            table[period][bin] += stats.per_period_histogram[period][k];
        }
    double col_total[6] = {};
    for (int period = 0; period < 12; ++period)
        for (int bin = 0; bin < 6; ++bin) col_total[bin] += table[period][bin];
    double chi2 = 0.0;
    for (int period = 0; period < 12; ++period)
        for (int bin = 0; bin < 6; ++bin) {
            const double expected = col_total[bin] / 12.0;
            REQUIRE(expected > 5.0);  // classical applicability condition
            const double diff = table[period][bin] - expected;
            chi2 += diff * diff / expected;
        }
    CHECK(chi2 < 73.311);
}

TEST_CASE("simulation is deterministic per seed and sensitive to it") {
    const ReplacementStats a = simulate_replacements(100, 0.05, 6, 2000, 3);
    const ReplacementStats b = simulate_replacements(100, 0.05, 6, 2000, 3);
    CHECK(a.mean == b.mean);
    CHECK(a.pooled_histogram == b.pooled_histogram);
    const ReplacementStats c = simulate_replacements(100, 0.05, 6, 2000, 4);
    CHECK(a.pooled_histogram != c.pooled_histogram);
}

TEST_CASE("simulation input validation") {
    CHECK_THROWS_AS(simulate_replacements(-1, 0.01, 12, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(simulate_replacements(10, -0.1, 12, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(simulate_replacements(10, 0.01, 0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(simulate_replacements(10, 0.01, 12, 0, 1), std::invalid_argument);
}

TEST_CASE("degenerate probabilities") {
    const ReplacementStats none = simulate_replacements(50, 0.0, 3, 100, 1);
    CHECK(none.mean == 0.0);
    CHECK(none.pooled_histogram[0] == 300);
    const ReplacementStats all = simulate_replacements(5, 1.0, 3, 100, 1);
    CHECK(all.mean == 5.0);
    REQUIRE(all.pooled_histogram.size() >= 6);
    CHECK(all.pooled_histogram[5] == 300);
}