#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "firefleet/cost.hpp"
#include "firefleet/csv.hpp"
#include "firefleet/radio.hpp"
#include "firefleet/ranking.hpp"
#include "firefleet/relay.hpp"
#include "firefleet/surveillance.hpp"

namespace firefleet {

/** Everything a plan depends on besides the fire radius itself. Parsed from
    a versioned JSON document; every field has a sensible default. */
struct PlannerConfig {
    int config_version = 1;
    Terrain terrain;  ///< flat unless a cone is configured
    Position3 firefighter{0.0, 0.0, 0.0};
    RadioParams radio;
    ThermalConstraint thermal;
    double z_lo = 0.0;  ///< drone-altitude sampling bounds (km)
    double z_hi = 5.0;
    std::optional<double> camera_range;    ///< d (km); absent -> equals the repeater range
    std::optional<double> repeater_range;  ///< r (km); absent -> Monte Carlo estimate
    DeploymentParams deployment;
    CostParams cost;
    int standby_factor = 2;  ///< deployed drones per covering position
    LayerRule layout_rule = LayerRule::ExactCover;
    std::uint64_t seed = 1;
    std::uint64_t samples = 100000;
    std::uint64_t oracle_samples = 20000;  ///< pre-write coverage re-checks

    void validate() const;
};

PlannerConfig parse_config(const std::string& json_text);
PlannerConfig load_config(const std::string& path);

/** The repeater range the config implies: the explicit value when present,
    otherwise the Monte Carlo estimate over the configured terrain
    (std::runtime_error when no altitude is feasible). */
double resolve_repeater_range(const PlannerConfig& config);

/**
 * A complete deployment for one fire. Covering counts come from the emitted
 * layout and ring (under LayerRule::ExactCover the layout can be smaller than
 * the band formula's count — `count` keeps the formula's answer and band).
 * Totals multiply by the standby factor; replacement cost is computed from
 * the deployed totals.
 */
struct FleetPlan {
    double D = 0.0, d = 0.0, r = 0.0;
    SsaCount count;
    SsaLayout layout;
    RrPlan ring;
    int n_cover = 0, m_cover = 0;
    int n_total = 0, m_total = 0;
    CostEstimate cost;
    bool feasible = true;  ///< relay deployment fits the flight range
};

FleetPlan plan(const PlannerConfig& config, double D);

// Dataset emitters. Emitters that produce geometry re-check every emitted
// ring (closed-form identity plus sampling at config.oracle_samples) and
// report the first failure through `oracle_error` (cleared otherwise);
// callers decide whether that is fatal.

/** Fleet totals versus x = D/d over (0, x_max] at `points` evenly spaced
    ratios: the small-fire staffing step function. Emits counts only. */
CsvTable sweep_fleet_steps(const PlannerConfig& config, double x_max, int points);

/** Relay ring radius, deployment distance and time versus D/r over
    (0, x_max], one pass per repeater range in `ranges`. */
CsvTable sweep_deployment(const PlannerConfig& config, const std::vector<double>& ranges,
                          double x_max, int points, std::string* oracle_error);

/** Safe horizontal range versus mountain base radius, for each handset
    altitude and attenuation factor, at fixed peak altitude H. The handset is
    placed on the slope; altitudes are sampled over [2 z0, L0]. */
CsvTable sweep_range_sensitivity(const PlannerConfig& config, double H,
                                 const std::vector<double>& base_radii,
                                 const std::vector<double>& handset_altitudes,
                                 const std::vector<double>& beta_factors);

/** Bundled reference cost row: a published-style planning line for one fire
    radius, kept for regression comparison. */
struct CostTableRow {
    double D;
    int n, m, u;
    std::int64_t G0, G1;
};

/** The bundled 40..66 km reference rows. Two of them (D = 48 and D = 52) are
    internally inconsistent — their G0 is not (n + m + ut) c — and cost_table
    flags them. */
const std::vector<CostTableRow>& reference_cost_rows();

/** For each reference row: the row itself, cost identities recomputed from
    its own (n, m, u), a consistency flag, and a freshly computed plan. */
CsvTable cost_table(const PlannerConfig& config, std::string* oracle_error);

/** Replanned time series for a fire growing at `rate` km/h from D0,
    sampled every `tick` hours up to and including the horizon. */
CsvTable simulate_growth(const PlannerConfig& config, double D0, double rate,
                         double horizon_h, double tick_h, std::string* oracle_error);

/** Per-drone positions of a plan, for plotting. */
CsvTable layout_table(const FleetPlan& plan);
/** Hover angles and coordinates of a plan's relay ring. */
CsvTable ring_table(const FleetPlan& plan);
/** One-row summary of a plan. */
CsvTable plan_table(const FleetPlan& plan);

// File interfaces used by the command-line front end.

/** Indicator CSV with header zone,<name>,<name>,... and one row per zone. */
IndicatorTable read_indicator_csv(const std::string& path,
                                  const std::vector<Orientation>& orientations);
/** Ratings CSV: one rating per line, optional `rating` header. */
std::vector<int> read_ratings_csv(const std::string& path);
/** Square pairwise-judgment matrix as bare CSV rows of numbers. */
std::vector<std::vector<double>> read_matrix_csv(const std::string& path);

}  // namespace firefleet
