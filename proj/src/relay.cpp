#include "firefleet/relay.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "firefleet/rng.hpp"

namespace firefleet {

namespace {

constexpr double kPi = std::numbers::pi;

void check_perimeter_inputs(double D, double r) {
    if (!(D >= 0.0)) throw std::invalid_argument("perimeter cover: fire radius must be >= 0");
    if (!(r > 0.0)) throw std::invalid_argument("perimeter cover: repeater range must be > 0");
}

}  // namespace

void DeploymentParams::validate() const {
    if (b < 0.0) throw std::invalid_argument("deployment: standoff must be >= 0");
    if (!(l > 0.0)) throw std::invalid_argument("deployment: flight range must be > 0");
    if (!(v > 0.0)) throw std::invalid_argument("deployment: speed must be > 0");
}

int rr_count(double D, double r) {
    check_perimeter_inputs(D, r);
    if (D < r / 2.0) return 1;
    const double q = kPi / (2.0 * std::asin(r / (2.0 * D)));
    const double nearest = std::round(q);
    if (std::abs(q - nearest) <= 1e-9) return static_cast<int>(nearest);
    return static_cast<int>(std::floor(q)) + 1;
}

double ring_radius(double D, double r, int m) {
    check_perimeter_inputs(D, r);
    if (m < 1) throw std::invalid_argument("ring radius: relay count must be >= 1");
    const int required = rr_count(D, r);
    if (m != required)
        throw std::invalid_argument("ring radius: these (D, r) require m = " +
                                    std::to_string(required));
    const double sin_half = std::sin(kPi / m);
    const double disc = r * r - D * D * sin_half * sin_half;
    return D * std::cos(kPi / m) + std::sqrt(std::max(disc, 0.0));
}

RrPlan deployment_metrics(double D, double r, const DeploymentParams& params) {
    params.validate();
    RrPlan plan;
    plan.D = D;
    plan.r = r;
    plan.m = rr_count(D, r);
    plan.ring = ring_radius(D, r, plan.m);
    plan.far_point_angle = kPi / plan.m;
    plan.angles.reserve(plan.m);
    for (int j = 0; j < plan.m; ++j)
        plan.angles.push_back(kPi / plan.m + 2.0 * kPi * j / plan.m);

    const double reach = D + params.b;
    plan.deploy_distance =
        std::sqrt(plan.ring * plan.ring + reach * reach +
                  2.0 * plan.ring * reach * std::cos(kPi / plan.m));
    plan.deploy_time = plan.deploy_distance / params.v;
    plan.feasible = plan.deploy_distance <= params.l;
    return plan;
}

CoverageReport verify_perimeter_coverage(int m, double ring, double D, double r,
                                         std::uint64_t samples, std::uint64_t seed) {
    check_perimeter_inputs(D, r);
    if (m < 1) throw std::invalid_argument("perimeter coverage: relay count must be >= 1");
    if (samples < 1) throw std::invalid_argument("perimeter coverage: samples must be >= 1");

    const double limit = r * (1.0 + 1e-12);
    const Rng rng(seed, streams::kPerimeterCoverage);
    CoverageReport report;
    std::uint64_t uncovered = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double theta = 2.0 * kPi * rng.uniform(i);
        // Nearest hover point sits at angular offset in [-pi/m, pi/m].
        const double offset = std::remainder(theta - kPi / m, 2.0 * kPi / m);
        const double dist2 =
            D * D + ring * ring - 2.0 * D * ring * std::cos(offset);
        const double distance = std::sqrt(std::max(dist2, 0.0));
        if (distance <= limit) continue;
        ++uncovered;
        if (distance - r > report.worst_margin) {
            report.worst_margin = distance - r;
            report.worst_uncovered = Vec2{D * std::cos(theta), D * std::sin(theta)};
        }
    }
    report.uncovered_fraction =
        static_cast<double>(uncovered) / static_cast<double>(samples);
    report.covered = uncovered == 0;
    return report;
}

RrPlan replan_on_growth(const RrPlan& prev, double new_D, double r,
                        const DeploymentParams& params) {
    if (new_D < prev.D)
        throw std::invalid_argument("replan: fires do not shrink in this model");
    RrPlan next = deployment_metrics(new_D, r, params);
    if (next.m == prev.m) next.angles = prev.angles;
    return next;
}

}  // namespace firefleet
