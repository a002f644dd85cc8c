#include "firefleet/cost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "firefleet/rng.hpp"

namespace firefleet {

void CostParams::validate() const {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("cost: retirement probability must be in [0, 1]");
    if (t < 0) throw std::invalid_argument("cost: horizon must be >= 0 months");
    if (c < 0) throw std::invalid_argument("cost: unit price must be >= 0");
}

int replacements_per_period(int n, int m, double p, RoundingMode mode) {
    if (n < 0 || m < 0) throw std::invalid_argument("replacements: counts must be >= 0");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("replacements: probability must be in [0, 1]");
    const double expected = (static_cast<double>(n) + static_cast<double>(m)) * p;
    switch (mode) {
        case RoundingMode::Floor:
            return static_cast<int>(std::floor(expected));
        case RoundingMode::Ceil:
            return static_cast<int>(std::ceil(expected));
        case RoundingMode::Nearest:
        default:
            return static_cast<int>(std::llround(expected));
    }
}

CostEstimate total_costs(int n, int m, int u, const CostParams& params) {
    params.validate();
    if (n < 0 || m < 0 || u < 0)
        throw std::invalid_argument("costs: counts must be >= 0");
    CostEstimate out;
    out.u = u;
    const std::int64_t ut = static_cast<std::int64_t>(u) * params.t;
    out.additional = ut * params.c;
    out.total = (static_cast<std::int64_t>(n) + m + ut) * params.c;
    return out;
}

namespace {

/** Binomial(fleet, p) draw by CDF inversion of one uniform. */
int binomial_draw(int fleet, double p, double uniform) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return fleet;
    const double odds = p / (1.0 - p);
    double pmf = std::pow(1.0 - p, fleet);
    double cdf = pmf;
    int k = 0;
    while (cdf <= uniform && k < fleet) {
        pmf *= odds * static_cast<double>(fleet - k) / static_cast<double>(k + 1);
        cdf += pmf;
        ++k;
    }
    return k;
}

}  // namespace

ReplacementStats simulate_replacements(int fleet, double p, int periods,
                                       std::uint64_t trials, std::uint64_t seed) {
    if (fleet < 0) throw std::invalid_argument("simulate: fleet must be >= 0");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("simulate: probability must be in [0, 1]");
    if (periods < 1) throw std::invalid_argument("simulate: periods must be >= 1");
    if (trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");

    ReplacementStats stats;
    stats.trials = trials;
    stats.periods = periods;
    stats.per_period_histogram.assign(periods, std::vector<std::uint64_t>());

    const Rng rng(seed, streams::kReplacementSim);
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        for (int period = 0; period < periods; ++period) {
            const std::uint64_t draw_index =
                trial * static_cast<std::uint64_t>(periods) + period;
            const int k = binomial_draw(fleet, p, rng.uniform(draw_index));
            sum += k;
            sum_sq += static_cast<double>(k) * k;
            auto& hist = stats.per_period_histogram[period];
            if (hist.size() <= static_cast<std::size_t>(k)) hist.resize(k + 1, 0);
            ++hist[k];
        }
    }

    const double count = static_cast<double>(trials) * periods;
    stats.mean = sum / count;
    stats.variance = sum_sq / count - stats.mean * stats.mean;

    std::size_t width = 0;
    for (const auto& hist : stats.per_period_histogram)
        width = std::max(width, hist.size());
    stats.pooled_histogram.assign(width, 0);
    for (auto& hist : stats.per_period_histogram) {
        hist.resize(width, 0);
        for (std::size_t k = 0; k < width; ++k) stats.pooled_histogram[k] += hist[k];
    }
    return stats;
}

}  // namespace firefleet
