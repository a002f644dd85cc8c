#pragma once

#include <optional>

#include "firefleet/geometry.hpp"

namespace firefleet {

/** Continuous point heat source: deposits `rate` units of energy per hour. */
struct PointSource {
    Position3 at;
    double rate = 0.0;
};

/** Instantaneous point release of `energy` units at t = 0. */
struct PointImpulse {
    Position3 at;
    double energy = 0.0;
};

/**
 * Homogeneous conducting medium with an optional initial impulse and an
 * optional continuous source. Temperatures superpose on the uniform ambient
 * field. All validation happens in validate(); the evaluation routines
 * assume a valid medium.
 */
struct HeatMedium {
    double conductivity = 1.0;   // k, energy / (km * h * deg)
    double heat_capacity = 1.0;  // C, energy / (mass * deg)
    double density = 1.0;        // rho, mass / km^3
    double threshold = 0.0;      // T0: max tolerable temperature for airframes

    double ambient = 0.0;                 // uniform initial field
    std::optional<PointImpulse> impulse;  // delta part of the initial field
    std::optional<PointSource> source;    // forcing term

    int quadrature_steps = 256;  // time-quadrature resolution for the source term

    double diffusivity() const { return conductivity / (heat_capacity * density); }

    /** Throws std::invalid_argument when k, C, rho, or steps are non-positive. */
    void validate() const;
};

/**
 * Free-space heat kernel: the temperature at squared distance r2 and time t
 * from a unit-energy impulse in a medium of diffusivity alpha. Integrates to
 * one over space for every t > 0. At t = 0 it degenerates to the impulse
 * itself (0 away from the origin).
 */
double heat_kernel(double r2, double alpha, double t);

/**
 * Temperature at point p and time t >= 0. Superposition of the ambient
 * field, the diffused impulse, and the time-quadrature of the continuous
 * source (kernel convolved with rate/(C*rho)).
 */
double heat_temperature(const Position3& p, double t, const HeatMedium& medium);

}  // namespace firefleet
