#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "firefleet/radio.hpp"

using namespace firefleet;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("attenuation coefficient matches the lossy-medium closed form") {
    // VHF-band example: w = 2*pi*1e8 rad/s, free-space mu, eps ~ 4.425e-11,
    // sigma = 1e-3 S. Frozen against an independent high-precision evaluation.
    const double w = 2.0 * kPi * 1e8;
    const double mu = 4.0 * kPi * 1e-7;
    const double eps = 4.425e-11;
    const double sigma = 1e-3;
    const double beta = attenuation_coefficient(w, mu, eps, sigma);
    CHECK(beta == doctest::Approx(0.08424577022846792).epsilon(1e-12));

    // Monotone nondecreasing in sigma and w; zero for a lossless medium.
    CHECK(attenuation_coefficient(w, mu, eps, 0.0) == doctest::Approx(0.0));
    CHECK(attenuation_coefficient(w, mu, eps, 2e-3) > beta);
    CHECK(attenuation_coefficient(2.0 * w, mu, eps, sigma) > beta);
}

TEST_CASE("attenuation multiplier is exp(-beta * path)") {
    CHECK(attenuation_multiplier(0.1, 5.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
    CHECK(attenuation_multiplier(0.0, 100.0) == 1.0);
}

TEST_CASE("effective range reproduces the frozen slope scenario") {
    const ConeMountain cone{1.986, 13.0};
    RadioParams radio;
    radio.beta_factor = 0.4;
    const Position3 firefighter = cone.surface_position(0.9);
    CHECK(firefighter.horizontal_radius() ==
          doctest::Approx(13.0 * 0.9 / 1.986).epsilon(1e-15));

    const EffectiveRange er = effective_range({0, 0, 1.8}, firefighter, cone, radio);
    CHECK(er.base == doctest::Approx(1.5212646749635601).epsilon(1e-12));
    CHECK(er.raw_fraction == doctest::Approx(3.0478562752290279).epsilon(1e-12));
    // raw f > 1 clamps to 1, so L = base * beta.
    CHECK(er.L == doctest::Approx(0.60850586998542404).epsilon(1e-12));
}

TEST_CASE("beta = 1 leaves the geometric term unattenuated") {
    const ConeMountain cone{1.986, 13.0};
    RadioParams radio;  // beta_factor = 1
    const Position3 firefighter = cone.surface_position(0.9);
    const EffectiveRange er = effective_range({0, 0, 2.5}, firefighter, cone, radio);
    CHECK(er.L == doctest::Approx(er.base).epsilon(1e-15));
}

TEST_CASE("effective range rejects out-of-domain altitudes") {
    const ConeMountain cone{1.986, 13.0};
    const RadioParams radio;
    const Position3 firefighter = cone.surface_position(0.9);
    CHECK_THROWS_AS(effective_range({0, 0, 5.1}, firefighter, cone, radio),
                    std::domain_error);
    CHECK_THROWS_AS(effective_range({0, 0, 1.7}, firefighter, cone, radio),
                    std::domain_error);  // z1 < 2 z0
    CHECK_THROWS_AS(effective_range({0, 0, 2.0}, {0, 0, 2.5}, cone, radio),
                    std::invalid_argument);  // firefighter above the peak
}

TEST_CASE("flat terrain gives the full handheld range") {
    RadioParams radio;
    const EffectiveRange er = effective_range_flat(radio);
    CHECK(er.L == 5.0);
    CHECK(er.base == 5.0);
    CHECK(er.raw_fraction == 0.0);
}

TEST_CASE("flat unconstrained range converges to the handheld range") {
    RangeQuery query;
    query.samples = 20000;
    query.seed = 7;
    const RangeResult result = horizontal_range(query);
    CHECK(result.feasible);
    CHECK(result.r == doctest::Approx(5.0).epsilon(1e-3));
    CHECK(result.accepted == query.samples);
    CHECK(result.best_altitude < 0.01);
}

TEST_CASE("an altitude floor caps the flat range at the floor altitude") {
    RangeQuery query;
    query.thermal.altitude_floor = 0.547;
    query.samples = 100000;
    query.seed = 1;
    const RangeResult result = horizontal_range(query);
    // Closed-form supremum sqrt(L0^2 - floor^2), frozen:
    const double expect = 4.9699890341931339;
    CHECK(result.feasible);
    CHECK(std::sqrt(5.0 * 5.0 - 0.547 * 0.547) ==
          doctest::Approx(expect).epsilon(1e-15));
    CHECK(result.r <= expect);
    CHECK(result.r == doctest::Approx(expect).epsilon(1e-3));
    CHECK(result.best_altitude >= 0.547);
    CHECK(result.skipped_thermal > 0);
    CHECK(result.accepted + result.skipped_thermal == query.samples);
}

TEST_CASE("base-ring operator on the alpine cone yields a usable range") {
    RangeQuery query;
    query.terrain.mountain = ConeMountain{1.986, 13.0};
    query.radio.beta_factor = 0.4;
    query.firefighter = {13.0, 0.0, 0.9};
    query.z_lo = 1.8;
    query.z_hi = 5.0;
    query.samples = 100000;
    query.seed = 1;
    const RangeResult result = horizontal_range(query);
    CHECK(result.feasible);
    CHECK(result.r == doctest::Approx(2.82945084671122).epsilon(1e-2));
    CHECK(result.r < 2.82945084671122 + 1e-9);  // supremum sits at z1 = z_lo
    CHECK(result.best_altitude == doctest::Approx(1.8).epsilon(1e-2));
    CHECK(result.r > 0.0);
    CHECK(result.r < 5.0);
}

TEST_CASE("slope-surface operator on the alpine cone is infeasible") {
    RangeQuery query;
    query.terrain.mountain = ConeMountain{1.986, 13.0};
    query.radio.beta_factor = 0.4;
    query.firefighter = query.terrain.mountain->surface_position(0.9);
    query.z_lo = 1.8;
    query.z_hi = 5.0;
    query.samples = 20000;
    query.seed = 1;
    const RangeResult result = horizontal_range(query);
    CHECK_FALSE(result.feasible);
    CHECK(result.r == 0.0);
    CHECK(result.accepted == 0);
    CHECK(result.skipped_unreachable > 0);
    CHECK(result.accepted + result.skipped_domain + result.skipped_over_range +
              result.skipped_thermal + result.skipped_unreachable ==
          query.samples);
}

TEST_CASE("domain skips are counted when bounds exceed the model domain") {
    RangeQuery query;  // flat, L0 = 5
    query.z_hi = 6.0;  // altitudes above L0 are out of the model's domain
    query.samples = 20000;
    query.seed = 3;
    const RangeResult result = horizontal_range(query);
    CHECK(result.feasible);
    CHECK(result.skipped_domain > 0);
    CHECK(result.accepted + result.skipped_domain == query.samples);
}

TEST_CASE("a hot medium pushes the best altitude above the cutoff") {
    // Impulse of energy 10 at the origin, alpha = 0.25, probed at t = 1:
    // T(z) = 10 * (4*pi*alpha)^(-3/2) * exp(-z^2 / (4*alpha)). The threshold
    // is chosen so altitudes below z* = 1 are too hot.
    HeatMedium medium;
    medium.conductivity = 0.25;  // C = rho = 1 -> alpha = 0.25
    medium.impulse = PointImpulse{{0, 0, 0}, 10.0};
    const double a = 4.0 * medium.diffusivity() * 1.0;
    const double z_star = 1.0;
    medium.threshold = 10.0 * std::pow(kPi * a, -1.5) * std::exp(-z_star * z_star / a);

    RangeQuery query;
    query.thermal.medium = medium;
    query.thermal.medium_time = 1.0;
    query.samples = 100000;
    query.seed = 2;
    const RangeResult result = horizontal_range(query);
    CHECK(result.feasible);
    CHECK(result.skipped_thermal > 0);
    CHECK(result.best_altitude >= z_star - 1e-9);
    const double expect = std::sqrt(25.0 - z_star * z_star);
    CHECK(result.r == doctest::Approx(expect).epsilon(1e-3));
}

TEST_CASE("range results are deterministic and improve with more samples") {
    RangeQuery query;
    query.thermal.altitude_floor = 1.0;
    query.samples = 5000;
    query.seed = 11;
    const RangeResult a = horizontal_range(query);
    const RangeResult b = horizontal_range(query);
    CHECK(a.r == b.r);
    CHECK(a.best_altitude == b.best_altitude);

    query.samples = 10000;  // prefix property: more samples never lose ground
    const RangeResult c = horizontal_range(query);
    CHECK(c.r >= a.r);
}

TEST_CASE("query validation") {
    RangeQuery query;
    query.samples = 0;
    CHECK_THROWS_AS(horizontal_range(query), std::invalid_argument);
    query = RangeQuery{};
    query.z_lo = 3.0;
    query.z_hi = 1.0;
    CHECK_THROWS_AS(horizontal_range(query), std::invalid_argument);
    query = RangeQuery{};
    query.terrain.mountain = ConeMountain{1.0, 2.0};
    query.firefighter = {0, 0, 1.5};  // above the peak
    CHECK_THROWS_AS(horizontal_range(query), std::invalid_argument);
}
