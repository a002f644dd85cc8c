#pragma once

#include <cstdint>
#include <optional>

#include "firefleet/geometry.hpp"
#include "firefleet/heat.hpp"

namespace firefleet {

/** Idealized conical mountain with its peak on the z-axis at altitude H. */
struct ConeMountain {
    double H = 1.0;  ///< peak altitude (km)
    double R = 1.0;  ///< base radius (km)

    /** Point on the slope at handset altitude z0, placed in the x-z plane. */
    Position3 surface_position(double z0) const;

    void validate() const;
};

/** Flat ground unless a mountain is present. */
struct Terrain {
    std::optional<ConeMountain> mountain;

    bool flat() const { return !mountain.has_value(); }
};

/** Handheld/repeater radio characteristics. */
struct RadioParams {
    double L0 = 5.0;                    ///< unobstructed handheld range (km)
    double repeater_flat_range = 20.0;  ///< repeater reach on open ground (km), informational
    double beta_factor = 1.0;           ///< obstruction attenuation multiplier in (0, 1]
    double watts = 0.0;                 ///< transmit power, informational
    double frequency_hz = 0.0;          ///< carrier frequency, informational

    void validate() const;
};

/**
 * Plane-wave attenuation coefficient of a lossy medium, in nepers per unit
 * length:
 *
 *   beta = w * sqrt( mu*eps/2 * ( sqrt(1 + (sigma/(w*eps))^2) - 1 ) )
 *
 * Nonnegative and monotone nondecreasing in both sigma and w.
 */
double attenuation_coefficient(double angular_frequency, double permeability,
                               double permittivity, double conductivity);

/** Range multiplier exp(-beta * path) left by a physical attenuation
    coefficient acting over an obstructed path length. */
double attenuation_multiplier(double beta_nepers_per_km, double path_km);

struct EffectiveRange {
    double L = 0.0;             ///< usable radio range (km)
    double base = 0.0;          ///< unattenuated geometric term (km)
    double raw_fraction = 0.0;  ///< obstructed path fraction before clamping to [0, 1]
};

/**
 * Usable handheld-radio range between a drone at altitude drone.z and a
 * firefighter near a cone mountain.
 *
 * With z1 = drone.z, z0 = firefighter.z and rho0 the firefighter's horizontal
 * distance from the peak axis:
 *
 *   base = sqrt( (sqrt(L0^2 - z1^2) - rho0)^2 + (z1 - z0)^2 )
 *   f    = 2R(H - z0) / ( H*sqrt(L0^2 - z1^2) + R*sqrt(z1 - 2 z0) ),  clamped to [0, 1]
 *   L    = base * (1 + (beta_factor - 1) * f)
 *
 * Only the drone's altitude enters; its horizontal placement is implicit in
 * the sqrt(L0^2 - z1^2) reach term. The unclamped f is reported so callers
 * can see how far outside [0, 1] the path fraction fell.
 *
 * Throws std::domain_error when z1 > L0 (reach radicand negative) or
 * z1 < 2*z0 (path-fraction radicand negative).
 */
EffectiveRange effective_range(const Position3& drone, const Position3& firefighter,
                               const ConeMountain& cone, const RadioParams& radio);

/** Open ground: nothing obstructs, so L is the handheld range itself. */
EffectiveRange effective_range_flat(const RadioParams& radio);

/**
 * Thermal feasibility rule for sampled drone altitudes. When `medium` is set,
 * an altitude z1 is feasible iff the temperature at time `medium_time`,
 * probed directly above the medium's source (or impulse, or the origin), does
 * not exceed medium->threshold. Otherwise `altitude_floor`, when set, imposes
 * z1 >= floor. With neither, every altitude is thermally feasible.
 */
struct ThermalConstraint {
    std::optional<double> altitude_floor;  ///< minimum usable altitude (km)
    std::optional<HeatMedium> medium;      ///< temperature field with threshold
    double medium_time = 1.0;              ///< evaluation instant for the medium (h)
};

struct RangeQuery {
    Terrain terrain;
    RadioParams radio;
    ThermalConstraint thermal;
    Position3 firefighter{0.0, 0.0, 0.0};
    double z_lo = 0.0;  ///< sampled drone-altitude bounds (km)
    double z_hi = 5.0;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
};

struct RangeResult {
    double r = 0.0;              ///< best safe horizontal range found (km)
    double best_altitude = 0.0;  ///< altitude achieving r (km)
    double best_L = 0.0;         ///< usable radio range at that altitude (km)
    bool feasible = false;       ///< false when every sample was rejected
    std::uint64_t accepted = 0;
    std::uint64_t skipped_domain = 0;       ///< z1 < 2 z0 or z1 > L0
    std::uint64_t skipped_over_range = 0;   ///< formula exceeded the open-ground range
    std::uint64_t skipped_thermal = 0;      ///< too hot / below the altitude floor
    std::uint64_t skipped_unreachable = 0;  ///< L < z1: ground out of reach entirely
};

/**
 * Safe horizontal repeater range: maximizes sqrt(L^2 - z1^2) over drone
 * altitudes z1 drawn uniformly from [z_lo, z_hi], keeping only altitudes that
 * are inside the range model's domain, yield L <= L0, satisfy the thermal
 * constraint, and reach the ground (L >= z1). Deterministic per seed; sample
 * index i always consumes draw i, so results for a given seed are a prefix
 * property: doubling `samples` can only improve r.
 */
RangeResult horizontal_range(const RangeQuery& query);

}  // namespace firefleet
