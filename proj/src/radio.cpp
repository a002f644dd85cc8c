#include "firefleet/radio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "firefleet/rng.hpp"

namespace firefleet {

void ConeMountain::validate() const {
    if (!(H > 0.0)) throw std::invalid_argument("cone mountain: peak altitude must be > 0");
    if (!(R > 0.0)) throw std::invalid_argument("cone mountain: base radius must be > 0");
}

Position3 ConeMountain::surface_position(double z0) const {
    validate();
    if (z0 < 0.0 || z0 > H)
        throw std::invalid_argument("cone mountain: surface altitude outside [0, H]");
    return Position3{R * z0 / H, 0.0, z0};
}

void RadioParams::validate() const {
    if (!(L0 > 0.0)) throw std::invalid_argument("radio: handheld range must be > 0");
    if (!(repeater_flat_range > 0.0))
        throw std::invalid_argument("radio: repeater flat range must be > 0");
    if (!(beta_factor > 0.0 && beta_factor <= 1.0))
        throw std::invalid_argument("radio: beta_factor must be in (0, 1]");
}

double attenuation_coefficient(double angular_frequency, double permeability,
                               double permittivity, double conductivity) {
    if (!(angular_frequency > 0.0))
        throw std::invalid_argument("attenuation: angular frequency must be > 0");
    if (!(permeability > 0.0)) throw std::invalid_argument("attenuation: permeability must be > 0");
    if (!(permittivity > 0.0)) throw std::invalid_argument("attenuation: permittivity must be > 0");
    if (conductivity < 0.0) throw std::invalid_argument("attenuation: conductivity must be >= 0");

    const double tan_loss = conductivity / (angular_frequency * permittivity);
    // sqrt(1 + t^2) - 1 written as t^2 / (sqrt(1 + t^2) + 1) to survive tiny t.
    const double bracket = tan_loss * tan_loss / (std::sqrt(1.0 + tan_loss * tan_loss) + 1.0);
    return angular_frequency * std::sqrt(permeability * permittivity / 2.0 * bracket);
}

double attenuation_multiplier(double beta_nepers_per_km, double path_km) {
    if (beta_nepers_per_km < 0.0)
        throw std::invalid_argument("attenuation multiplier: beta must be >= 0");
    if (path_km < 0.0) throw std::invalid_argument("attenuation multiplier: path must be >= 0");
    return std::exp(-beta_nepers_per_km * path_km);
}

EffectiveRange effective_range(const Position3& drone, const Position3& firefighter,
                               const ConeMountain& cone, const RadioParams& radio) {
    cone.validate();
    radio.validate();
    const double z1 = drone.z;
    const double z0 = firefighter.z;
    if (z0 < 0.0 || z0 > cone.H)
        throw std::invalid_argument("effective range: firefighter altitude outside [0, H]");
    if (z1 < 0.0) throw std::invalid_argument("effective range: drone altitude must be >= 0");
    if (z1 > radio.L0)
        throw std::domain_error("effective range: drone altitude exceeds the handheld range");
    if (z1 < 2.0 * z0)
        throw std::domain_error("effective range: drone below twice the handset altitude");

    const double reach = std::sqrt(radio.L0 * radio.L0 - z1 * z1);
    const double dx = reach - firefighter.horizontal_radius();
    const double dz = z1 - z0;
    const double base = std::sqrt(dx * dx + dz * dz);

    const double f_num = 2.0 * cone.R * (cone.H - z0);
    const double f_den = cone.H * reach + cone.R * std::sqrt(z1 - 2.0 * z0);
    double raw = 0.0;
    if (f_num > 0.0) {
        raw = f_den > 0.0 ? f_num / f_den : std::numeric_limits<double>::infinity();
    }
    const double f = std::clamp(raw, 0.0, 1.0);
    return EffectiveRange{base * (1.0 + (radio.beta_factor - 1.0) * f), base, raw};
}

EffectiveRange effective_range_flat(const RadioParams& radio) {
    radio.validate();
    return EffectiveRange{radio.L0, radio.L0, 0.0};
}

namespace {

bool thermally_feasible(const ThermalConstraint& thermal, double z1) {
    if (thermal.medium) {
        const HeatMedium& medium = *thermal.medium;
        Position3 probe{0.0, 0.0, z1};
        if (medium.source) {
            probe.x = medium.source->at.x;
            probe.y = medium.source->at.y;
        } else if (medium.impulse) {
            probe.x = medium.impulse->at.x;
            probe.y = medium.impulse->at.y;
        }
        return heat_temperature(probe, thermal.medium_time, medium) <= medium.threshold;
    }
    if (thermal.altitude_floor) return z1 >= *thermal.altitude_floor;
    return true;
}

}  // namespace

RangeResult horizontal_range(const RangeQuery& query) {
    query.radio.validate();
    if (query.terrain.mountain) {
        query.terrain.mountain->validate();
        const double z0 = query.firefighter.z;
        if (z0 < 0.0 || z0 > query.terrain.mountain->H)
            throw std::invalid_argument("horizontal range: firefighter altitude outside [0, H]");
    }
    if (query.thermal.medium) query.thermal.medium->validate();
    if (query.samples < 1) throw std::invalid_argument("horizontal range: samples must be >= 1");
    if (!(query.z_hi >= query.z_lo) || query.z_lo < 0.0)
        throw std::invalid_argument("horizontal range: bad altitude bounds");

    const Rng rng(query.seed, streams::kRangeSampling);
    const double min_altitude =
        query.terrain.mountain ? 2.0 * query.firefighter.z : 0.0;

    RangeResult out;
    for (std::uint64_t i = 0; i < query.samples; ++i) {
        const double z1 = rng.uniform(i, query.z_lo, query.z_hi);
        if (z1 > query.radio.L0 || z1 < min_altitude) {
            ++out.skipped_domain;
            continue;
        }
        double L;
        if (query.terrain.mountain) {
            L = effective_range(Position3{0.0, 0.0, z1}, query.firefighter,
                                *query.terrain.mountain, query.radio)
                    .L;
        } else {
            L = query.radio.L0;
        }
        if (L > query.radio.L0) {
            ++out.skipped_over_range;
            continue;
        }
        if (!thermally_feasible(query.thermal, z1)) {
            ++out.skipped_thermal;
            continue;
        }
        if (L < z1) {
            ++out.skipped_unreachable;
            continue;
        }
        const double r = std::sqrt(L * L - z1 * z1);
        ++out.accepted;
        if (!out.feasible || r > out.r) {
            out.feasible = true;
            out.r = r;
            out.best_altitude = z1;
            out.best_L = L;
        }
    }
    return out;
}

}  // namespace firefleet
