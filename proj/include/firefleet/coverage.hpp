#pragma once

#include "firefleet/geometry.hpp"

namespace firefleet {

/** Outcome of a sampling check that a drone arrangement covers its target set. */
struct CoverageReport {
    bool covered = true;
    double uncovered_fraction = 0.0;  ///< fraction of samples out of reach
    Vec2 worst_uncovered{0.0, 0.0};   ///< most exposed uncovered sample
    double worst_margin = 0.0;        ///< how far beyond reach it lies (km)
};

}  // namespace firefleet
