// Command-line front end: region ranking, danger-rating dynamics, fleet
// planning and the dataset sweeps, all driven by an optional JSON config.
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "firefleet/markov.hpp"
#include "firefleet/planner.hpp"

namespace ff = firefleet;

namespace {

struct GlobalOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> oracle_samples;
    bool strict = false;
    std::string out;  ///< output file; for `plan`, an output directory
    std::string format = "csv";
};

ff::PlannerConfig make_config(const GlobalOptions& global) {
    ff::PlannerConfig config =
        global.config_path.empty() ? ff::PlannerConfig{} : ff::load_config(global.config_path);
    if (global.seed) config.seed = *global.seed;
    if (global.samples) config.samples = *global.samples;
    if (global.oracle_samples) config.oracle_samples = *global.oracle_samples;
    config.validate();
    return config;
}

void emit_table(const ff::CsvTable& table, const GlobalOptions& global) {
    const bool as_json = global.format == "json";
    if (global.out.empty()) {
        const std::string text = as_json ? table.to_json() : table.to_csv();
        std::fputs(text.c_str(), stdout);
    } else {
        table.write(global.out, as_json);
    }
}

/** Reports a failed pre-write re-check; fatal only under --strict. */
int finish(const std::string& oracle_error, bool strict) {
    if (!oracle_error.empty()) {
        std::fprintf(stderr, "oracle: %s\n", oracle_error.c_str());
        if (strict) return 3;
    }
    return 0;
}

std::vector<ff::Orientation> parse_orientations(const std::string& text) {
    std::vector<ff::Orientation> orientations;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, ',')) {
        if (token == "benefit")
            orientations.push_back(ff::Orientation::Benefit);
        else if (token == "cost")
            orientations.push_back(ff::Orientation::Cost);
        else
            throw std::invalid_argument("orientations must be a comma list of benefit|cost");
    }
    return orientations;
}

int run_rank_regions(const GlobalOptions& global, const std::string& zones_path,
                     const std::string& orientation_text, std::vector<double> weights,
                     const std::string& matrix_path, double rho, std::size_t top) {
    const ff::IndicatorTable zones =
        ff::read_indicator_csv(zones_path, parse_orientations(orientation_text));
    if (!matrix_path.empty()) {
        const ff::AhpResult ahp = ff::ahp_weights(ff::read_matrix_csv(matrix_path));
        std::fprintf(stderr, "judgment matrix: lambda_max %.9f, consistency ratio %.6f\n",
                     ahp.lambda_max, ahp.consistency_ratio);
        if (!ahp.consistent) {
            std::fputs("warning: judgment matrix fails the 0.10 consistency test\n", stderr);
            if (global.strict) return 3;
        }
        weights = ahp.weights;
    }
    const ff::GraResult result = ff::gra_scores(zones, weights, rho);
    for (std::size_t k = 0; k < result.degenerate_columns.size(); ++k)
        if (result.degenerate_columns[k])
            std::fprintf(stderr, "warning: indicator %s is constant across zones\n",
                         zones.indicator_names[k].c_str());

    ff::CsvTable table({"rank", "zone", "score", "selected"});
    for (std::size_t i = 0; i < result.ranked.size(); ++i)
        table.add_row({ff::format_number(static_cast<int>(i + 1)), result.ranked[i].zone,
                       ff::format_number(result.ranked[i].score),
                       ff::format_number(i < top)});
    emit_table(table, global);
    return 0;
}

const char* state_name(int index) {
    return index == 0 ? "low" : index == 1 ? "medium" : "high";
}

std::string rational_text(const ff::Rational& q) {
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

int run_fit_markov(const GlobalOptions& global, const std::string& ratings_path,
                   const std::string& radii_path) {
    std::vector<int> ratings;
    if (!ratings_path.empty()) {
        ratings = ff::read_ratings_csv(ratings_path);
    } else {
        for (const std::vector<double>& row : ff::read_matrix_csv(radii_path))
            for (double radius : row) ratings.push_back(ff::classify_rating(radius));
    }
    const ff::TransitionMatrix fit = ff::fit_transition_matrix(ratings);
    if (fit.any_unobserved())
        std::fputs("warning: at least one rating never occurred; its row is uniform\n",
                   stderr);

    ff::CsvTable table({"from_state", "to_low", "to_medium", "to_high", "to_low_exact",
                        "to_medium_exact", "to_high_exact"});
    for (int i = 0; i < 3; ++i) {
        std::vector<std::string> row{state_name(i)};
        for (int j = 0; j < 3; ++j)
            row.push_back(ff::format_number(boost::rational_cast<double>(fit.p[i][j])));
        for (int j = 0; j < 3; ++j) row.push_back(rational_text(fit.p[i][j]));
        table.add_row(row);
    }
    std::string oracle_error;
    try {
        const std::array<ff::Rational, 3> pi = ff::stationary_distribution(fit);
        std::vector<std::string> row{"stationary"};
        for (int j = 0; j < 3; ++j)
            row.push_back(ff::format_number(boost::rational_cast<double>(pi[j])));
        for (int j = 0; j < 3; ++j) row.push_back(rational_text(pi[j]));
        table.add_row(row);
    } catch (const std::domain_error& err) {
        oracle_error = err.what();
    }
    emit_table(table, global);
    return finish(oracle_error, global.strict);
}

int run_plan(const GlobalOptions& global, double fire_radius,
             const std::optional<double>& range_override,
             const std::optional<double>& camera_override) {
    ff::PlannerConfig config = make_config(global);
    if (range_override) config.repeater_range = *range_override;
    if (camera_override) config.camera_range = *camera_override;
    const ff::FleetPlan fleet = ff::plan(config, fire_radius);

    std::string oracle_error;
    const ff::CoverageReport disk =
        ff::verify_disk_coverage(fleet.layout, fleet.D, config.oracle_samples, config.seed);
    if (!disk.covered)
        oracle_error = "surveillance layout leaves " +
                       ff::format_number(disk.uncovered_fraction) + " of the disk uncovered";
    const ff::CoverageReport rim = ff::verify_perimeter_coverage(
        fleet.ring.m, fleet.ring.ring, fleet.D, fleet.r, config.oracle_samples, config.seed);
    if (oracle_error.empty() && !rim.covered)
        oracle_error = "relay ring leaves " + ff::format_number(rim.uncovered_fraction) +
                       " of the perimeter out of range";
    if (!fleet.feasible)
        std::fputs("warning: one-leg deployment distance exceeds the flight range\n", stderr);

    const bool as_json = global.format == "json";
    const char* extension = as_json ? ".json" : ".csv";
    const std::filesystem::path dir = global.out.empty() ? "." : global.out;
    std::filesystem::create_directories(dir);
    if (const int code = finish(oracle_error, global.strict); code != 0) return code;
    ff::plan_table(fleet).write((dir / (std::string("plan") + extension)).string(), as_json);
    ff::layout_table(fleet).write(
        (dir / (std::string("ssa_positions") + extension)).string(), as_json);
    ff::ring_table(fleet).write((dir / (std::string("rr_positions") + extension)).string(),
                                as_json);

    const std::string text =
        as_json ? ff::plan_table(fleet).to_json() : ff::plan_table(fleet).to_csv();
    std::fputs(text.c_str(), stdout);
    return 0;
}

int run_simulate_replacements(const GlobalOptions& global, int fleet, std::uint64_t trials,
                              std::optional<int> periods, std::optional<double> probability) {
    const ff::PlannerConfig config = make_config(global);
    const ff::ReplacementStats stats = ff::simulate_replacements(
        fleet, probability.value_or(config.cost.p), periods.value_or(config.cost.t), trials,
        config.seed);
    std::fprintf(stderr, "replacements per period: mean %.6f, variance %.6f\n", stats.mean,
                 stats.variance);
    const double draws = static_cast<double>(stats.trials) * stats.periods;
    ff::CsvTable table({"count", "occurrences", "frequency"});
    for (std::size_t k = 0; k < stats.pooled_histogram.size(); ++k)
        table.add_row({ff::format_number(static_cast<int>(k)),
                       ff::format_number(stats.pooled_histogram[k]),
                       ff::format_number(stats.pooled_histogram[k] / draws)});
    emit_table(table, global);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Wildfire drone fleet planning: region ranking, danger-rating dynamics,\n"
        "surveillance/relay geometry, deployment metrics and replacement costs."};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--config", global.config_path, "JSON configuration file");
    app.add_option("--seed", global.seed, "override the configured random seed");
    app.add_option("--samples", global.samples, "override the Monte Carlo sample count");
    app.add_option("--oracle-samples", global.oracle_samples,
                   "override the pre-write re-check sample count");
    app.add_flag("--strict", global.strict,
                 "exit 3 when a pre-write re-check or consistency test fails");
    app.add_option("--out", global.out, "write output here instead of stdout");
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    // rank-regions
    std::string zones_path, matrix_path;
    std::string orientation_text = "cost,cost,benefit";
    std::vector<double> weights{0.539, 0.248, 0.213};
    double rho = 0.5;
    std::size_t top = 4;
    CLI::App* rank = app.add_subcommand(
        "rank-regions", "grey-relational ranking of candidate surveillance zones");
    rank->fallthrough();
    rank->add_option("--zones", zones_path, "indicator CSV (zone,<indicator>,...)")
        ->required();
    rank->add_option("--orientations", orientation_text,
                     "per-indicator benefit|cost list (comma separated)");
    rank->add_option("--weights", weights, "indicator weights (must sum to 1)")
        ->delimiter(',');
    rank->add_option("--matrix", matrix_path,
                     "pairwise-judgment CSV; derives the weights and overrides --weights");
    rank->add_option("--rho", rho, "grey distinguishing coefficient in (0, 1]");
    rank->add_option("--top", top, "how many leading zones to mark selected");

    // fit-markov
    std::string ratings_path, radii_path;
    CLI::App* markov = app.add_subcommand(
        "fit-markov", "fit danger-rating transition dynamics and their steady state");
    markov->fallthrough();
    CLI::Option* ratings_opt =
        markov->add_option("--ratings", ratings_path, "CSV of ratings 1|2|3, one per line");
    markov->add_option("--radii", radii_path, "CSV of fire radii (km), one per line")
        ->excludes(ratings_opt);

    // plan
    double fire_radius = 0.0;
    std::optional<double> range_override, camera_override;
    CLI::App* plan_cmd =
        app.add_subcommand("plan", "complete fleet plan for one fire radius");
    plan_cmd->fallthrough();
    plan_cmd->add_option("--fire-radius", fire_radius, "fire radius D (km)")->required();
    plan_cmd->add_option("--range", range_override, "repeater range r (km) override");
    plan_cmd->add_option("--camera", camera_override, "camera range d (km) override");

    // sweep-fleet
    int fleet_points = 2000;
    double fleet_max_ratio = 2.0 * std::cos(std::numbers::pi / 5.0);
    CLI::App* sweep_fleet = app.add_subcommand(
        "sweep-fleet", "fleet size versus D/d across the small-fire staffing steps");
    sweep_fleet->fallthrough();
    sweep_fleet->add_option("--points", fleet_points, "grid points over (0, max-ratio]");
    sweep_fleet->add_option("--max-ratio", fleet_max_ratio, "largest D/d ratio");

    // sweep-deployment
    std::vector<double> deploy_ranges{4.97, 3.3001};
    int deploy_points = 2000;
    double deploy_max_ratio = 20.0;
    CLI::App* sweep_deploy = app.add_subcommand(
        "sweep-deployment", "relay ring radius and deployment time versus D/r");
    sweep_deploy->fallthrough();
    sweep_deploy->add_option("--ranges", deploy_ranges, "repeater ranges r (km)")
        ->delimiter(',');
    sweep_deploy->add_option("--points", deploy_points, "grid points over (0, max-ratio]");
    sweep_deploy->add_option("--max-ratio", deploy_max_ratio, "largest D/r ratio");

    // sweep-range
    double peak = 1.986;
    std::vector<double> base_radii{4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0, 18.0};
    std::vector<double> handset_altitudes{0.3, 0.6, 0.9, 1.2};
    std::vector<double> betas{1.0, 0.7, 0.4};
    CLI::App* sweep_range = app.add_subcommand(
        "sweep-range", "safe horizontal range versus mountain profile and attenuation");
    sweep_range->fallthrough();
    sweep_range->add_option("--peak", peak, "mountain peak altitude H (km)");
    sweep_range->add_option("--base-radii", base_radii, "mountain base radii R (km)")
        ->delimiter(',');
    sweep_range
        ->add_option("--handset-altitudes", handset_altitudes,
                     "firefighter altitudes z0 on the slope (km)")
        ->delimiter(',');
    sweep_range->add_option("--betas", betas, "attenuation factors in (0, 1]")
        ->delimiter(',');

    // cost-table
    std::optional<double> cost_range;
    CLI::App* costs = app.add_subcommand(
        "cost-table", "reference cost rows re-derived and compared with fresh plans");
    costs->fallthrough();
    costs->add_option("--range", cost_range,
                      "repeater range r (km); default 3.3001 when the config has none");

    // simulate-growth
    double growth_d0 = 0.0, growth_rate = 0.5, horizon = 12.0, tick = 1.0;
    std::optional<double> growth_range;
    CLI::App* growth = app.add_subcommand(
        "simulate-growth", "replanned fleet time series for a growing fire");
    growth->fallthrough();
    growth->add_option("--fire-radius", growth_d0, "initial fire radius D0 (km)")
        ->required();
    growth->add_option("--growth-rate", growth_rate, "radius growth rate (km/h)");
    growth->add_option("--horizon", horizon, "simulated time span (h)");
    growth->add_option("--tick", tick, "replanning interval (h)");
    growth->add_option("--range", growth_range, "repeater range r (km) override");

    // simulate-replacements
    int sim_fleet = 0;
    std::uint64_t sim_trials = 100000;
    std::optional<int> sim_periods;
    std::optional<double> sim_probability;
    CLI::App* replacements = app.add_subcommand(
        "simulate-replacements", "Monte Carlo distribution of per-period drone retirements");
    replacements->fallthrough();
    replacements->add_option("--fleet", sim_fleet, "total deployed drones n + m")
        ->required();
    replacements->add_option("--trials", sim_trials, "simulated fleet lifetimes");
    replacements->add_option("--periods", sim_periods, "periods per trial");
    replacements->add_option("--probability", sim_probability,
                             "per-period retirement probability");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rank->parsed())
            return run_rank_regions(global, zones_path, orientation_text, weights,
                                    matrix_path, rho, top);
        if (markov->parsed()) {
            if (ratings_path.empty() == radii_path.empty())
                throw std::invalid_argument("fit-markov needs exactly one of --ratings|--radii");
            return run_fit_markov(global, ratings_path, radii_path);
        }
        if (plan_cmd->parsed())
            return run_plan(global, fire_radius, range_override, camera_override);
        if (sweep_fleet->parsed()) {
            const ff::PlannerConfig config = make_config(global);
            emit_table(ff::sweep_fleet_steps(config, fleet_max_ratio, fleet_points), global);
            return 0;
        }
        if (sweep_deploy->parsed()) {
            const ff::PlannerConfig config = make_config(global);
            std::string oracle_error;
            const ff::CsvTable table = ff::sweep_deployment(
                config, deploy_ranges, deploy_max_ratio, deploy_points, &oracle_error);
            if (const int code = finish(oracle_error, global.strict); code != 0) return code;
            emit_table(table, global);
            return 0;
        }
        if (sweep_range->parsed()) {
            const ff::PlannerConfig config = make_config(global);
            emit_table(ff::sweep_range_sensitivity(config, peak, base_radii,
                                                   handset_altitudes, betas),
                       global);
            return 0;
        }
        if (costs->parsed()) {
            ff::PlannerConfig config = make_config(global);
            if (cost_range)
                config.repeater_range = *cost_range;
            else if (!config.repeater_range)
                config.repeater_range = 3.3001;
            std::string oracle_error;
            const ff::CsvTable table = ff::cost_table(config, &oracle_error);
            if (const int code = finish(oracle_error, global.strict); code != 0) return code;
            emit_table(table, global);
            return 0;
        }
        if (growth->parsed()) {
            ff::PlannerConfig config = make_config(global);
            if (growth_range) config.repeater_range = *growth_range;
            std::string oracle_error;
            const ff::CsvTable table =
                ff::simulate_growth(config, growth_d0, growth_rate, horizon, tick,
                                    &oracle_error);
            if (const int code = finish(oracle_error, global.strict); code != 0) return code;
            emit_table(table, global);
            return 0;
        }
        if (replacements->parsed())
            return run_simulate_replacements(global, sim_fleet, sim_trials, sim_periods,
                                             sim_probability);
    } catch (const std::invalid_argument& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    } catch (const std::domain_error& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 3;
    }
    return 2;
}
