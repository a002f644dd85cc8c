#include "firefleet/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace firefleet {

void IndicatorTable::validate() const {
    if (zones.size() < 2) throw std::invalid_argument("indicator table: need at least two zones");
    if (zones.size() != values.size())
        throw std::invalid_argument("indicator table: one value row per zone required");
    const std::size_t arity = indicator_names.size();
    if (arity == 0) throw std::invalid_argument("indicator table: need at least one indicator");
    if (orientations.size() != arity)
        throw std::invalid_argument("indicator table: one orientation per indicator required");
    for (const auto& row : values) {
        if (row.size() != arity)
            throw std::invalid_argument("indicator table: ragged value row");
        for (double v : row)
            if (!std::isfinite(v))
                throw std::invalid_argument("indicator table: non-finite value");
    }
}

namespace {

// Saaty random indices for matrix sizes 1..9; sizes 1-2 are always consistent.
constexpr double kRandomIndex[10] = {0.0, 0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45};

}  // namespace

AhpResult ahp_weights(const std::vector<std::vector<double>>& pairwise) {
    const std::size_t n = pairwise.size();
    if (n < 2 || n > 9)
        throw std::invalid_argument("ahp: matrix size must be between 2 and 9");
    for (std::size_t i = 0; i < n; ++i) {
        if (pairwise[i].size() != n) throw std::invalid_argument("ahp: matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
            if (!(pairwise[i][j] > 0.0))
                throw std::invalid_argument("ahp: judgments must be positive");
            if (std::abs(pairwise[i][j] * pairwise[j][i] - 1.0) > 1e-9)
                throw std::invalid_argument("ahp: matrix is not reciprocal");
        }
    }

    std::vector<double> v(n, 1.0 / static_cast<double>(n)), next(n);
    double lambda = 0.0;
    for (int iter = 0; iter < 100000; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = 0.0;
            for (std::size_t j = 0; j < n; ++j) next[i] += pairwise[i][j] * v[j];
        }
        lambda = std::accumulate(next.begin(), next.end(), 0.0);
        double shift = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] /= lambda;
            shift = std::max(shift, std::abs(next[i] - v[i]));
        }
        v.swap(next);
        if (shift < 1e-12) break;
    }

    AhpResult out;
    out.weights = v;
    out.lambda_max = lambda;
    const double ri = kRandomIndex[n];
    out.consistency_ratio =
        ri > 0.0 ? (lambda - static_cast<double>(n)) / ((static_cast<double>(n) - 1.0) * ri) : 0.0;
    out.consistent = out.consistency_ratio <= 0.1;
    return out;
}

GraResult gra_scores(const IndicatorTable& table, const std::vector<double>& weights,
                     double rho) {
    table.validate();
    const std::size_t zones = table.zones.size();
    const std::size_t arity = table.indicator_names.size();
    if (weights.size() != arity)
        throw std::invalid_argument("gra: one weight per indicator required");
    double weight_sum = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw std::invalid_argument("gra: weights must be positive");
        weight_sum += w;
    }
    if (std::abs(weight_sum - 1.0) > 1e-9)
        throw std::invalid_argument("gra: weights must sum to 1");
    if (!(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument("gra: distinguishing coefficient must be in (0, 1]");

    GraResult out;
    out.degenerate_columns.assign(arity, false);

    // Deviations from the ideal series (identically 1 after normalization).
    std::vector<std::vector<double>> delta(zones, std::vector<double>(arity, 0.0));
    double delta_min = std::numeric_limits<double>::infinity();
    double delta_max = 0.0;
    bool any_column = false;
    for (std::size_t k = 0; k < arity; ++k) {
        double lo = table.values[0][k], hi = table.values[0][k];
        for (std::size_t i = 1; i < zones; ++i) {
            lo = std::min(lo, table.values[i][k]);
            hi = std::max(hi, table.values[i][k]);
        }
        if (hi == lo) {
            out.degenerate_columns[k] = true;
            for (std::size_t i = 0; i < zones; ++i) delta[i][k] = 0.0;
            continue;
        }
        any_column = true;
        for (std::size_t i = 0; i < zones; ++i) {
            const double v = table.values[i][k];
            const double x = table.orientations[k] == Orientation::Benefit
                                 ? (v - lo) / (hi - lo)
                                 : (hi - v) / (hi - lo);
            delta[i][k] = 1.0 - x;
            delta_min = std::min(delta_min, delta[i][k]);
            delta_max = std::max(delta_max, delta[i][k]);
        }
    }
    if (!any_column) delta_min = 0.0;  // every column constant: all coefficients 1

    out.ranked.reserve(zones);
    for (std::size_t i = 0; i < zones; ++i) {
        GreyScore gs;
        gs.zone = table.zones[i];
        gs.coefficients.resize(arity);
        for (std::size_t k = 0; k < arity; ++k) {
            gs.coefficients[k] =
                out.degenerate_columns[k] || delta_max == 0.0
                    ? 1.0
                    : (delta_min + rho * delta_max) / (delta[i][k] + rho * delta_max);
            gs.score += weights[k] * gs.coefficients[k];
        }
        out.ranked.push_back(std::move(gs));
    }
    std::sort(out.ranked.begin(), out.ranked.end(), [](const GreyScore& a, const GreyScore& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.zone < b.zone;
    });
    return out;
}

std::vector<std::string> select_targets(const std::vector<GreyScore>& ranked, std::size_t k) {
    if (k < 1 || k > ranked.size())
        throw std::invalid_argument("select targets: k outside [1, zone count]");
    std::vector<std::string> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(ranked[i].zone);
    return out;
}

}  // namespace firefleet
