#pragma once

#include <cstdint>
#include <vector>

#include "firefleet/coverage.hpp"

namespace firefleet {

/** Relay deployment inputs beyond the fire itself. */
struct DeploymentParams {
    double b = 5.0;   ///< authority standoff beyond the fire edge (km)
    double l = 30.0;  ///< drone flight range (km)
    double v = 72.0;  ///< drone speed (km/h)

    void validate() const;
};

/**
 * Minimum relay-drone count whose radius-r disks, hovered over equipartition
 * points of a concentric ring, cover the circumference of the radius-D fire:
 * 1 when D < r/2, otherwise q = pi / (2 asin(r / 2D)) rounded to q itself
 * when integral (tolerance 1e-9), else floor(q) + 1.
 */
int rr_count(double D, double r);

/**
 * Hover-ring radius for m relays:
 *
 *   C_m = D cos(pi/m) + sqrt(r^2 - D^2 sin^2(pi/m))
 *
 * (for m = 1, 2, 3 this reduces to r - D, sqrt(r^2 - D^2) and
 * D/2 + sqrt(4 r^2 - 3 D^2)/2). Placing the relays at ring angles 2pi/m
 * apart makes each perimeter point at angular offset up to pi/m from its
 * nearest relay sit at distance at most r, with equality at the offset
 * extremes. m must be the count rr_count prescribes for (D, r); a mismatch
 * throws std::invalid_argument naming the valid count.
 */
double ring_radius(double D, double r, int m);

struct RrPlan {
    int m = 1;
    double D = 0.0;
    double r = 0.0;
    double ring = 0.0;                ///< C_m (km)
    std::vector<double> angles;       ///< hover polar angles (rad), 2pi/m apart
    double far_point_angle = 0.0;     ///< pi/m: hover point farthest from the authority
    double deploy_distance = 0.0;     ///< S_m (km): authority to that farthest point
    double deploy_time = 0.0;         ///< Q_m (h): S_m / v
    bool feasible = true;             ///< S_m <= flight range
};

/**
 * Full relay plan: m, C_m, hover angles pi/m + 2pi j/m, and the deployment
 * leg from the authority — which stands at polar angle pi, b km beyond the
 * fire edge — to the farthest hover point:
 *
 *   S_m = sqrt(C_m^2 + (D+b)^2 + 2 C_m (D+b) cos(pi/m)),  Q_m = S_m / v.
 *
 * Infeasible plans (S_m > l) are returned flagged, not rejected.
 */
RrPlan deployment_metrics(double D, double r, const DeploymentParams& params);

/** Samples perimeter angles uniformly (deterministic per seed) and checks
    each point sits within r of some hover point; O(1) per sample. A relative
    slack of 1e-12 keeps boundary-exact constructions from failing on
    rounding. */
CoverageReport verify_perimeter_coverage(int m, double ring, double D, double r,
                                         std::uint64_t samples, std::uint64_t seed);

/** Replans for a grown fire. The count and ring radius are recomputed; if m
    is unchanged the previous hover angles are kept verbatim. Shrinking fires
    are out of scope and rejected. */
RrPlan replan_on_growth(const RrPlan& prev, double new_D, double r,
                        const DeploymentParams& params);

}  // namespace firefleet
