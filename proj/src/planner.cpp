#include "firefleet/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace firefleet {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void bad_config(const std::string& message) {
    throw std::invalid_argument("config: " + message);
}

void require_keys(const json& node, const char* where,
                  std::initializer_list<const char*> allowed) {
    for (auto it = node.begin(); it != node.end(); ++it) {
        bool known = false;
        for (const char* key : allowed) {
            if (it.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) bad_config("unknown key \"" + it.key() + "\" in " + where);
    }
}

double require_number(const json& node, const char* where, const char* key) {
    if (!node.contains(key))
        bad_config(std::string(where) + " is missing \"" + key + "\"");
    if (!node.at(key).is_number())
        bad_config(std::string(where) + "." + key + " must be a number");
    return node.at(key).get<double>();
}

double number_or(const json& node, const char* where, const char* key, double fallback) {
    if (!node.contains(key)) return fallback;
    if (!node.at(key).is_number())
        bad_config(std::string(where) + "." + key + " must be a number");
    return node.at(key).get<double>();
}

Position3 parse_position(const json& node, const char* where, const char* extra_key = nullptr) {
    if (extra_key)
        require_keys(node, where, {"x_km", "y_km", "z_km", extra_key});
    else
        require_keys(node, where, {"x_km", "y_km", "z_km"});
    return Position3{number_or(node, where, "x_km", 0.0), number_or(node, where, "y_km", 0.0),
                     number_or(node, where, "z_km", 0.0)};
}

void parse_terrain(const json& node, PlannerConfig& config) {
    require_keys(node, "terrain", {"type", "height_km", "base_radius_km"});
    if (!node.contains("type") || !node.at("type").is_string())
        bad_config("terrain.type must be \"flat\" or \"cone\"");
    const std::string type = node.at("type").get<std::string>();
    if (type == "flat") {
        config.terrain.mountain.reset();
    } else if (type == "cone") {
        config.terrain.mountain = ConeMountain{require_number(node, "terrain", "height_km"),
                                               require_number(node, "terrain", "base_radius_km")};
    } else {
        bad_config("terrain.type must be \"flat\" or \"cone\"");
    }
}

void parse_radio(const json& node, PlannerConfig& config) {
    require_keys(node, "radio",
                 {"handheld_range_km", "repeater_flat_range_km", "beta_factor",
                  "attenuation_nepers_per_km", "obstructed_path_km", "watts", "frequency_hz"});
    RadioParams& radio = config.radio;
    radio.L0 = number_or(node, "radio", "handheld_range_km", radio.L0);
    radio.repeater_flat_range =
        number_or(node, "radio", "repeater_flat_range_km", radio.repeater_flat_range);
    radio.watts = number_or(node, "radio", "watts", radio.watts);
    radio.frequency_hz = number_or(node, "radio", "frequency_hz", radio.frequency_hz);
    const bool has_factor = node.contains("beta_factor");
    const bool has_physical = node.contains("attenuation_nepers_per_km");
    if (has_factor && has_physical)
        bad_config("radio: give either beta_factor or attenuation_nepers_per_km, not both");
    if (has_factor) {
        radio.beta_factor = require_number(node, "radio", "beta_factor");
    } else if (has_physical) {
        radio.beta_factor =
            attenuation_multiplier(require_number(node, "radio", "attenuation_nepers_per_km"),
                                   require_number(node, "radio", "obstructed_path_km"));
    }
}

HeatMedium parse_medium(const json& node) {
    require_keys(node, "thermal.medium",
                 {"conductivity", "heat_capacity", "density", "threshold", "ambient",
                  "quadrature_steps", "source", "impulse"});
    HeatMedium medium;
    medium.conductivity = number_or(node, "medium", "conductivity", medium.conductivity);
    medium.heat_capacity = number_or(node, "medium", "heat_capacity", medium.heat_capacity);
    medium.density = number_or(node, "medium", "density", medium.density);
    medium.threshold = require_number(node, "thermal.medium", "threshold");
    medium.ambient = number_or(node, "medium", "ambient", medium.ambient);
    medium.quadrature_steps = static_cast<int>(
        number_or(node, "medium", "quadrature_steps", medium.quadrature_steps));
    if (node.contains("source")) {
        const json& src = node.at("source");
        medium.source = PointSource{parse_position(src, "thermal.medium.source", "rate"), 0.0};
        medium.source->rate = require_number(src, "thermal.medium.source", "rate");
    }
    if (node.contains("impulse")) {
        const json& imp = node.at("impulse");
        medium.impulse = PointImpulse{parse_position(imp, "thermal.medium.impulse", "energy"), 0.0};
        medium.impulse->energy = require_number(imp, "thermal.medium.impulse", "energy");
    }
    return medium;
}

void parse_thermal(const json& node, PlannerConfig& config) {
    require_keys(node, "thermal", {"altitude_floor_km", "medium", "time_h"});
    if (node.contains("altitude_floor_km") && node.contains("medium"))
        bad_config("thermal: give either altitude_floor_km or medium, not both");
    if (node.contains("altitude_floor_km"))
        config.thermal.altitude_floor = require_number(node, "thermal", "altitude_floor_km");
    if (node.contains("medium")) config.thermal.medium = parse_medium(node.at("medium"));
    config.thermal.medium_time = number_or(node, "thermal", "time_h", config.thermal.medium_time);
}

void parse_deployment(const json& node, PlannerConfig& config) {
    require_keys(node, "deployment",
                 {"authority_standoff_km", "flight_range_km", "speed_km_h"});
    DeploymentParams& dep = config.deployment;
    dep.b = number_or(node, "deployment", "authority_standoff_km", dep.b);
    dep.l = number_or(node, "deployment", "flight_range_km", dep.l);
    dep.v = number_or(node, "deployment", "speed_km_h", dep.v);
}

void parse_cost(const json& node, PlannerConfig& config) {
    require_keys(node, "cost",
                 {"retirement_probability", "periods", "unit_price", "rounding"});
    CostParams& cost = config.cost;
    cost.p = number_or(node, "cost", "retirement_probability", cost.p);
    cost.t = static_cast<int>(number_or(node, "cost", "periods", cost.t));
    cost.c = static_cast<std::int64_t>(number_or(node, "cost", "unit_price",
                                                 static_cast<double>(cost.c)));
    if (node.contains("rounding")) {
        const std::string mode = node.at("rounding").get<std::string>();
        if (mode == "nearest")
            cost.rounding = RoundingMode::Nearest;
        else if (mode == "floor")
            cost.rounding = RoundingMode::Floor;
        else if (mode == "ceil")
            cost.rounding = RoundingMode::Ceil;
        else
            bad_config("cost.rounding must be nearest, floor or ceil");
    }
}

std::string ring_check_error(const RrPlan& ring, const PlannerConfig& config) {
    // Closed-form placement identity: the farthest perimeter point from any
    // hover position must sit at distance exactly r.
    const double worst =
        std::sqrt(std::max(ring.D * ring.D + ring.ring * ring.ring -
                               2.0 * ring.D * ring.ring * std::cos(kPi / ring.m),
                           0.0));
    char buf[160];
    if (std::abs(worst - ring.r) > 1e-9) {
        std::snprintf(buf, sizeof(buf),
                      "ring identity failed at D=%.6g r=%.6g m=%d (worst %.12g)", ring.D,
                      ring.r, ring.m, worst);
        return buf;
    }
    const CoverageReport report = verify_perimeter_coverage(
        ring.m, ring.ring, ring.D, ring.r, config.oracle_samples, config.seed);
    if (!report.covered) {
        std::snprintf(buf, sizeof(buf),
                      "perimeter oracle failed at D=%.6g r=%.6g m=%d (uncovered %.3g)",
                      ring.D, ring.r, ring.m, report.uncovered_fraction);
        return buf;
    }
    return {};
}

std::string layout_check_error(const SsaLayout& layout, double D,
                               const PlannerConfig& config) {
    const CoverageReport report =
        verify_disk_coverage(layout, D, config.oracle_samples, config.seed);
    if (report.covered) return {};
    char buf[160];
    std::snprintf(buf, sizeof(buf), "disk oracle failed at D=%.6g d=%.6g (uncovered %.3g)",
                  D, layout.camera_radius, report.uncovered_fraction);
    return buf;
}

void note_error(std::string* sink, const std::string& message) {
    if (sink && sink->empty() && !message.empty()) *sink = message;
}

}  // namespace

void PlannerConfig::validate() const {
    if (config_version != 1) bad_config("unsupported config_version");
    if (terrain.mountain) {
        terrain.mountain->validate();
        if (firefighter.z < 0.0 || firefighter.z > terrain.mountain->H)
            bad_config("firefighter altitude outside [0, H]");
    }
    radio.validate();
    if (thermal.medium) thermal.medium->validate();
    if (!(z_hi >= z_lo) || z_lo < 0.0) bad_config("bad altitude bounds");
    if (camera_range && !(*camera_range > 0.0)) bad_config("camera range must be > 0");
    if (repeater_range && !(*repeater_range > 0.0)) bad_config("repeater range must be > 0");
    deployment.validate();
    cost.validate();
    if (standby_factor < 1) bad_config("standby factor must be >= 1");
    if (samples < 1 || oracle_samples < 1) bad_config("sample counts must be >= 1");
}

PlannerConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& err) {
        bad_config(std::string("invalid JSON: ") + err.what());
    }
    if (!root.is_object()) bad_config("top level must be an object");
    require_keys(root, "top level",
                 {"config_version", "terrain", "firefighter", "radio", "thermal",
                  "altitude_bounds_km", "camera_range_km", "repeater_range_km", "deployment",
                  "cost", "standby_factor", "layout_rule", "seed", "samples",
                  "oracle_samples"});

    PlannerConfig config;
    config.config_version =
        static_cast<int>(number_or(root, "top level", "config_version", 1.0));
    if (root.contains("terrain")) parse_terrain(root.at("terrain"), config);
    if (root.contains("firefighter")) {
        const json& ff = root.at("firefighter");
        if (ff.contains("surface_altitude_km")) {
            require_keys(ff, "firefighter", {"surface_altitude_km"});
            if (!config.terrain.mountain)
                bad_config("firefighter.surface_altitude_km needs cone terrain");
            config.firefighter = config.terrain.mountain->surface_position(
                require_number(ff, "firefighter", "surface_altitude_km"));
        } else {
            config.firefighter = parse_position(ff, "firefighter");
        }
    }
    if (root.contains("radio")) parse_radio(root.at("radio"), config);
    if (root.contains("thermal")) parse_thermal(root.at("thermal"), config);
    if (root.contains("altitude_bounds_km")) {
        const json& bounds = root.at("altitude_bounds_km");
        if (!bounds.is_array() || bounds.size() != 2 || !bounds[0].is_number() ||
            !bounds[1].is_number())
            bad_config("altitude_bounds_km must be [lo, hi]");
        config.z_lo = bounds[0].get<double>();
        config.z_hi = bounds[1].get<double>();
    }
    if (root.contains("camera_range_km"))
        config.camera_range = require_number(root, "top level", "camera_range_km");
    if (root.contains("repeater_range_km"))
        config.repeater_range = require_number(root, "top level", "repeater_range_km");
    if (root.contains("deployment")) parse_deployment(root.at("deployment"), config);
    if (root.contains("cost")) parse_cost(root.at("cost"), config);
    config.standby_factor =
        static_cast<int>(number_or(root, "top level", "standby_factor", 2.0));
    if (root.contains("layout_rule")) {
        const std::string rule = root.at("layout_rule").get<std::string>();
        if (rule == "exact")
            config.layout_rule = LayerRule::ExactCover;
        else if (rule == "midpoint")
            config.layout_rule = LayerRule::MidpointEstimate;
        else
            bad_config("layout_rule must be exact or midpoint");
    }
    config.seed = static_cast<std::uint64_t>(number_or(root, "top level", "seed", 1.0));
    config.samples =
        static_cast<std::uint64_t>(number_or(root, "top level", "samples", 100000.0));
    config.oracle_samples =
        static_cast<std::uint64_t>(number_or(root, "top level", "oracle_samples", 20000.0));
    config.validate();
    return config;
}

PlannerConfig load_config(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("config: cannot open " + path);
    std::ostringstream text;
    text << file.rdbuf();
    return parse_config(text.str());
}

double resolve_repeater_range(const PlannerConfig& config) {
    config.validate();
    if (config.repeater_range) return *config.repeater_range;
    RangeQuery query;
    query.terrain = config.terrain;
    query.radio = config.radio;
    query.thermal = config.thermal;
    query.firefighter = config.firefighter;
    query.z_lo = config.z_lo;
    query.z_hi = config.z_hi;
    query.samples = config.samples;
    query.seed = config.seed;
    const RangeResult result = horizontal_range(query);
    if (!result.feasible)
        throw std::runtime_error(
            "repeater range: no feasible drone altitude under this configuration");
    return result.r;
}

FleetPlan plan(const PlannerConfig& config, double D) {
    config.validate();
    if (!(D > 0.0)) throw std::invalid_argument("plan: fire radius must be > 0");

    FleetPlan out;
    out.D = D;
    out.r = resolve_repeater_range(config);
    out.d = config.camera_range.value_or(out.r);
    out.count = ssa_count(D, out.d);
    out.layout = ssa_layout(D, out.d, config.layout_rule);
    out.ring = deployment_metrics(D, out.r, config.deployment);
    out.n_cover = out.layout.n();
    out.m_cover = out.ring.m;
    out.n_total = out.n_cover * config.standby_factor;
    out.m_total = out.m_cover * config.standby_factor;
    const int u = replacements_per_period(out.n_total, out.m_total, config.cost.p,
                                          config.cost.rounding);
    out.cost = total_costs(out.n_total, out.m_total, u, config.cost);
    out.feasible = out.ring.feasible;
    return out;
}

CsvTable sweep_fleet_steps(const PlannerConfig& config, double x_max, int points) {
    config.validate();
    if (!(x_max > 0.0)) throw std::invalid_argument("fleet sweep: x_max must be > 0");
    if (points < 1) throw std::invalid_argument("fleet sweep: points must be >= 1");
    CsvTable table({"ratio", "n_cover", "m_cover", "n_total", "m_total"});
    for (int i = 0; i < points; ++i) {
        const double x = x_max * (static_cast<double>(i + 1) / points);
        const int n = ssa_count(x, 1.0).n;
        const int m = rr_count(x, 1.0);
        table.add_row({format_number(x), format_number(n), format_number(m),
                       format_number(n * config.standby_factor),
                       format_number(m * config.standby_factor)});
    }
    return table;
}

CsvTable sweep_deployment(const PlannerConfig& config, const std::vector<double>& ranges,
                          double x_max, int points, std::string* oracle_error) {
    config.validate();
    if (ranges.empty()) throw std::invalid_argument("deployment sweep: no ranges given");
    if (!(x_max > 0.0)) throw std::invalid_argument("deployment sweep: x_max must be > 0");
    if (points < 1) throw std::invalid_argument("deployment sweep: points must be >= 1");
    if (oracle_error) oracle_error->clear();

    CsvTable table(
        {"range_km", "ratio", "m", "ring_km", "deploy_km", "deploy_h", "feasible"});
    for (double r : ranges) {
        if (!(r > 0.0)) throw std::invalid_argument("deployment sweep: range must be > 0");
        for (int i = 0; i < points; ++i) {
            const double x = x_max * (static_cast<double>(i + 1) / points);
            const RrPlan ring = deployment_metrics(x * r, r, config.deployment);
            note_error(oracle_error, ring_check_error(ring, config));
            table.add_row({format_number(r), format_number(x), format_number(ring.m),
                           format_number(ring.ring), format_number(ring.deploy_distance),
                           format_number(ring.deploy_time), format_number(ring.feasible)});
        }
    }
    return table;
}

CsvTable sweep_range_sensitivity(const PlannerConfig& config, double H,
                                 const std::vector<double>& base_radii,
                                 const std::vector<double>& handset_altitudes,
                                 const std::vector<double>& beta_factors) {
    config.validate();
    if (!(H > 0.0)) throw std::invalid_argument("range sweep: peak altitude must be > 0");
    CsvTable table(
        {"base_radius_km", "handset_altitude_km", "beta_factor", "range_km", "feasible"});
    for (double R : base_radii) {
        for (double z0 : handset_altitudes) {
            for (double beta : beta_factors) {
                const ConeMountain cone{H, R};
                RangeQuery query;
                query.terrain.mountain = cone;
                query.radio = config.radio;
                query.radio.beta_factor = beta;
                query.thermal = config.thermal;
                query.firefighter = cone.surface_position(z0);
                query.z_lo = 2.0 * z0;
                query.z_hi = config.radio.L0;
                query.samples = config.samples;
                query.seed = config.seed;
                const RangeResult result = horizontal_range(query);
                table.add_row({format_number(R), format_number(z0), format_number(beta),
                               format_number(result.r), format_number(result.feasible)});
            }
        }
    }
    return table;
}

const std::vector<CostTableRow>& reference_cost_rows() {
    // Bundled reference planning lines (D, n, m, u, G0, G1). The D = 48 and
    // D = 52 rows are internally inconsistent: their G0 is not (n+m+ut)c.
    static const std::vector<CostTableRow> rows = {
        {40.0, 514, 76, 6, 6620000, 720000},   {42.0, 514, 82, 6, 6680000, 720000},
        {44.0, 542, 84, 8, 7220000, 960000},   {46.0, 572, 88, 8, 7560000, 960000},
        {48.0, 662, 92, 8, 7600000, 960000},   {50.0, 662, 96, 8, 8540000, 960000},
        {52.0, 794, 100, 8, 8580000, 960000},  {54.0, 794, 104, 10, 10180000, 1200000},
        {56.0, 794, 108, 10, 10220000, 1200000}, {58.0, 794, 112, 10, 10260000, 1200000},
        {60.0, 938, 116, 12, 11980000, 1440000}, {62.0, 938, 120, 12, 12020000, 1440000},
        {64.0, 938, 122, 12, 12040000, 1440000}, {66.0, 1094, 126, 14, 13880000, 1680000}};
    return rows;
}

CsvTable cost_table(const PlannerConfig& config, std::string* oracle_error) {
    config.validate();
    if (oracle_error) oracle_error->clear();

    // Resolve the ranges once so the Monte Carlo estimate is not repeated.
    PlannerConfig resolved = config;
    resolved.repeater_range = resolve_repeater_range(config);

    // The reference rows assert their own cost regime; check them under it.
    const CostParams reference_params{};

    CsvTable table({"D_km", "m_ref", "n_ref", "u_ref", "G0_ref", "G1_ref", "G1_check",
                    "G0_check", "ref_consistent", "m_total", "n_total", "u", "G0", "G1"});
    for (const CostTableRow& row : reference_cost_rows()) {
        const CostEstimate check = total_costs(row.n, row.m, row.u, reference_params);
        const bool consistent = check.additional == row.G1 && check.total == row.G0;
        const FleetPlan fleet = plan(resolved, row.D);
        note_error(oracle_error, ring_check_error(fleet.ring, resolved));
        note_error(oracle_error, layout_check_error(fleet.layout, row.D, resolved));
        table.add_row({format_number(row.D), format_number(row.m), format_number(row.n),
                       format_number(row.u), format_number(row.G0), format_number(row.G1),
                       format_number(check.additional), format_number(check.total),
                       format_number(consistent), format_number(fleet.m_total),
                       format_number(fleet.n_total), format_number(fleet.cost.u),
                       format_number(fleet.cost.total), format_number(fleet.cost.additional)});
    }
    return table;
}

CsvTable simulate_growth(const PlannerConfig& config, double D0, double rate,
                         double horizon_h, double tick_h, std::string* oracle_error) {
    config.validate();
    if (!(D0 > 0.0)) throw std::invalid_argument("growth: initial radius must be > 0");
    if (rate < 0.0) throw std::invalid_argument("growth: rate must be >= 0");
    if (!(tick_h > 0.0)) throw std::invalid_argument("growth: tick must be > 0");
    if (horizon_h < 0.0) throw std::invalid_argument("growth: horizon must be >= 0");
    if (oracle_error) oracle_error->clear();

    PlannerConfig resolved = config;
    resolved.repeater_range = resolve_repeater_range(config);
    const double d = resolved.camera_range.value_or(*resolved.repeater_range);

    std::vector<double> times;
    for (int j = 0;; ++j) {
        const double t = j * tick_h;
        if (t >= horizon_h - 1e-12 * std::max(1.0, horizon_h)) break;
        times.push_back(t);
    }
    times.push_back(horizon_h);

    CsvTable table({"time_h", "fire_radius_km", "n_cover", "m_cover", "n_total", "m_total",
                    "ring_km", "deploy_h", "feasible"});
    RrPlan ring;
    bool first = true;
    for (double t : times) {
        const double D = D0 + rate * t;
        ring = first ? deployment_metrics(D, *resolved.repeater_range, resolved.deployment)
                     : replan_on_growth(ring, D, *resolved.repeater_range,
                                        resolved.deployment);
        first = false;
        const SsaLayout layout = ssa_layout(D, d, resolved.layout_rule);
        note_error(oracle_error, ring_check_error(ring, resolved));
        note_error(oracle_error, layout_check_error(layout, D, resolved));
        table.add_row(
            {format_number(t), format_number(D), format_number(layout.n()),
             format_number(ring.m), format_number(layout.n() * resolved.standby_factor),
             format_number(ring.m * resolved.standby_factor), format_number(ring.ring),
             format_number(ring.deploy_time), format_number(ring.feasible)});
    }
    return table;
}

CsvTable layout_table(const FleetPlan& fleet) {
    CsvTable table({"x_km", "y_km"});
    for (const Vec2& p : fleet.layout.positions)
        table.add_row({format_number(p.x), format_number(p.y)});
    return table;
}

CsvTable ring_table(const FleetPlan& fleet) {
    CsvTable table({"angle_rad", "x_km", "y_km"});
    for (double angle : fleet.ring.angles)
        table.add_row({format_number(angle), format_number(fleet.ring.ring * std::cos(angle)),
                       format_number(fleet.ring.ring * std::sin(angle))});
    return table;
}

CsvTable plan_table(const FleetPlan& fleet) {
    const char* method = fleet.layout.method == SsaMethod::Single ? "single"
                         : fleet.layout.method == SsaMethod::CircularDivision
                             ? "sectors"
                             : "hexagonal";
    CsvTable table({"D_km", "d_km", "r_km", "band", "method", "hex_layers", "n_cover",
                    "m_cover", "n_total", "m_total", "ring_km", "deploy_km", "deploy_h",
                    "feasible", "u", "G1", "G0"});
    table.add_row({format_number(fleet.D), format_number(fleet.d), format_number(fleet.r),
                   fleet.count.band, method, format_number(fleet.layout.hex_layers),
                   format_number(fleet.n_cover), format_number(fleet.m_cover),
                   format_number(fleet.n_total), format_number(fleet.m_total),
                   format_number(fleet.ring.ring), format_number(fleet.ring.deploy_distance),
                   format_number(fleet.ring.deploy_time), format_number(fleet.feasible),
                   format_number(fleet.cost.u), format_number(fleet.cost.additional),
                   format_number(fleet.cost.total)});
    return table;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trimmed(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t\r");
    std::size_t end = text.find_last_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> read_lines(const std::string& path, const char* what) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument(std::string(what) + ": cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(file, line)) {
        const std::string clean = trimmed(line);
        if (!clean.empty()) lines.push_back(clean);
    }
    return lines;
}

double parse_double(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not a number: \"" + text + "\"");
    }
}

}  // namespace

IndicatorTable read_indicator_csv(const std::string& path,
                                  const std::vector<Orientation>& orientations) {
    const std::vector<std::string> lines = read_lines(path, "indicator table");
    if (lines.size() < 2)
        throw std::invalid_argument("indicator table: need a header and at least one zone");
    const std::vector<std::string> header = split_csv_line(lines[0]);
    if (header.size() < 2 || trimmed(header[0]) != "zone")
        throw std::invalid_argument("indicator table: header must start with zone");

    IndicatorTable table;
    for (std::size_t k = 1; k < header.size(); ++k)
        table.indicator_names.push_back(trimmed(header[k]));
    if (orientations.size() != table.indicator_names.size())
        throw std::invalid_argument("indicator table: one orientation per indicator required");
    table.orientations = orientations;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> cells = split_csv_line(lines[i]);
        if (cells.size() != header.size())
            throw std::invalid_argument("indicator table: row width mismatch at line " +
                                        std::to_string(i + 1));
        table.zones.push_back(trimmed(cells[0]));
        std::vector<double> row;
        for (std::size_t k = 1; k < cells.size(); ++k)
            row.push_back(parse_double(trimmed(cells[k]), "indicator table"));
        table.values.push_back(std::move(row));
    }
    table.validate();
    return table;
}

std::vector<int> read_ratings_csv(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path, "ratings");
    std::vector<int> ratings;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i == 0 && lines[i] == "rating") continue;
        ratings.push_back(static_cast<int>(parse_double(lines[i], "ratings")));
    }
    return ratings;
}

std::vector<std::vector<double>> read_matrix_csv(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path, "matrix");
    std::vector<std::vector<double>> matrix;
    for (const std::string& line : lines) {
        std::vector<double> row;
        for (const std::string& cell : split_csv_line(line))
            row.push_back(parse_double(trimmed(cell), "matrix"));
        matrix.push_back(std::move(row));
    }
    return matrix;
}

}  // namespace firefleet
