#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "firefleet/coverage.hpp"
#include "firefleet/geometry.hpp"

namespace firefleet {

enum class SsaMethod { Single, CircularDivision, Hexagonal };

/** Camera-drone count for a fire disk, with the band of x = D/d it came from. */
struct SsaCount {
    int n = 1;
    SsaMethod method = SsaMethod::Single;
    int hex_layers = 0;  ///< concentric hexagon layers; 0 unless hexagonal
    std::string band;    ///< the interval of D/d that produced n
};

/**
 * Minimum surveillance-drone count for a fire of radius D seen by cameras of
 * horizontal range d. Piecewise in x = D/d with right-closed bands:
 *
 *   x <= 1                          -> 1   (one camera disk suffices)
 *   1 < x <= 2*sqrt(3)/3            -> 3   \
 *   2*sqrt(3)/3 < x <= sqrt(2)      -> 4    > equal-sector constructions
 *   sqrt(2) < x <= 2*cos(pi/5)      -> 5   /
 *   k hexagon layers otherwise      -> 1 + 3k(k+1)
 *
 * where k follows the midpoint layer rule below (k = 1, 2, 3 bands end at
 * x = 2, sqrt(13), 5; thereafter layer k reaches x = (3k + 1)/2).
 */
SsaCount ssa_count(double D, double d);

/** Ascending breakpoints of ssa_count in x = D/d, up to x_max. */
std::vector<double> ssa_breakpoints(double x_max);

/**
 * How many hexagon layers to deploy.
 *
 * ExactCover: smallest k whose hexagon union contains the disk, using the
 * exact covered radius (hex_cover_radius). MidpointEstimate: the layer-k ring
 * is credited with reach (3k + 1)/2 * d — the distance to its outer edge
 * midpoints — for k >= 4; k <= 3 uses the exact radii. MidpointEstimate never
 * under-covers: the credited reach is at or below the exact covered radius.
 */
enum class LayerRule { ExactCover, MidpointEstimate };

/** Exact radius, in units of d, of the largest centered disk contained in k
    concentric layers of regular hexagons inscribed in radius-d circles. Odd
    layers bind at an outer edge midpoint, (3k + 1)/2; even layers bind at the
    shared outer corner of two adjacent ring hexagons, slightly farther out. */
double hex_cover_radius(int layers);

/** Layer count prescribed by the midpoint rule for x = D/d (>= 1). */
int midpoint_layers(double x);

/** Smallest layer count whose hexagon union contains the radius-x disk
    (x in units of d, >= 1 returned). */
int exact_layers(double x);

/** Explicit drone positions covering the fire disk. */
struct SsaLayout {
    std::vector<Vec2> positions;  ///< relative to the fire center (km)
    double camera_radius = 0.0;   ///< d (km); hexagons are inscribed in this circle
    double hex_spacing = 0.0;     ///< lattice spacing (km); 0 unless hexagonal
    SsaMethod method = SsaMethod::Single;
    int hex_layers = 0;

    int n() const { return static_cast<int>(positions.size()); }
};

/**
 * Positions covering the radius-D disk. n = 1 puts the drone at the center;
 * n = 3, 4, 5 place one covering circle per equal sector, centered on the
 * sector bisector at the sector's minimum enclosing circle (chord-midpoint
 * circle for central angles >= 90 degrees, circumcircle for n = 5); larger
 * fires tile with regular hexagons on a triangular lattice of spacing
 * sqrt(3)*d, one lattice axis along +x, fire center on a hexagon center,
 * taking the layer count given by `rule`.
 */
SsaLayout ssa_layout(double D, double d, LayerRule rule);

/**
 * Samples `samples` points area-uniformly in the radius-D disk
 * (deterministic per seed). Circular layouts cover a point within distance
 * camera_radius of some drone; hexagonal layouts require the point to lie
 * inside some hexagon. Tiling hexagonal layouts are tested in O(1) per point
 * via lattice rounding.
 */
CoverageReport verify_disk_coverage(const SsaLayout& layout, double D,
                                    std::uint64_t samples, std::uint64_t seed);

}  // namespace firefleet
