#include "firefleet/surveillance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "firefleet/rng.hpp"

namespace firefleet {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kPi = std::numbers::pi;

std::string band_string(int k) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g < D/d <= %g (hexagon layers k=%d)",
                  (3.0 * k - 2.0) / 2.0, (3.0 * k + 1.0) / 2.0, k);
    return buf;
}

void check_ratio_inputs(double D, double d) {
    if (!(D > 0.0)) throw std::invalid_argument("disk cover: fire radius must be > 0");
    if (!(d > 0.0)) throw std::invalid_argument("disk cover: camera range must be > 0");
}

}  // namespace

double hex_cover_radius(int layers) {
    if (layers < 1) throw std::invalid_argument("hexagon cover: layer count must be >= 1");
    const double edge_mid = (3.0 * layers + 1.0) / 2.0;
    if (layers % 2 == 1) return edge_mid;
    return std::sqrt(edge_mid * edge_mid + 0.75);
}

int midpoint_layers(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("hexagon layers: ratio must be > 0");
    if (x <= 2.0) return 1;
    if (x <= std::sqrt(13.0)) return 2;
    if (x <= 5.0) return 3;
    // Start near the closed-form answer, then settle the boundary with the
    // same comparison the band scan uses.
    int k = std::max(4, static_cast<int>(std::ceil((2.0 * x - 1.0) / 3.0)) - 2);
    while ((3.0 * k + 1.0) / 2.0 < x) ++k;
    while (k > 4 && x <= (3.0 * (k - 1) + 1.0) / 2.0) --k;
    return k;
}

int exact_layers(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("hexagon layers: ratio must be > 0");
    int k = std::max(1, static_cast<int>(std::ceil((2.0 * x - 1.0) / 3.0)) - 2);
    while (hex_cover_radius(k) < x) ++k;
    while (k > 1 && hex_cover_radius(k - 1) >= x) --k;
    return k;
}

SsaCount ssa_count(double D, double d) {
    check_ratio_inputs(D, d);
    const double x = D / d;
    SsaCount out;
    if (x <= 1.0) {
        out = {1, SsaMethod::Single, 0, "D/d <= 1"};
    } else if (x <= 2.0 * kSqrt3 / 3.0) {
        out = {3, SsaMethod::CircularDivision, 0, "1 < D/d <= 2sqrt(3)/3"};
    } else if (x <= std::sqrt(2.0)) {
        out = {4, SsaMethod::CircularDivision, 0, "2sqrt(3)/3 < D/d <= sqrt(2)"};
    } else if (x <= 2.0 * std::cos(kPi / 5.0)) {
        out = {5, SsaMethod::CircularDivision, 0, "sqrt(2) < D/d <= 2cos(pi/5)"};
    } else {
        const int k = midpoint_layers(x);
        out.n = 1 + 3 * k * (k + 1);
        out.method = SsaMethod::Hexagonal;
        out.hex_layers = k;
        if (k == 1)
            out.band = "2cos(pi/5) < D/d <= 2";
        else if (k == 2)
            out.band = "2 < D/d <= sqrt(13)";
        else if (k == 3)
            out.band = "sqrt(13) < D/d <= 5";
        else
            out.band = band_string(k);
    }
    return out;
}

std::vector<double> ssa_breakpoints(double x_max) {
    std::vector<double> points;
    for (double x : {1.0, 2.0 * kSqrt3 / 3.0, std::sqrt(2.0), 2.0 * std::cos(kPi / 5.0), 2.0,
                     std::sqrt(13.0), 5.0}) {
        if (x <= x_max) points.push_back(x);
    }
    for (int k = 4; (3.0 * k + 1.0) / 2.0 <= x_max; ++k)
        points.push_back((3.0 * k + 1.0) / 2.0);
    return points;
}

namespace {

SsaLayout sector_layout(double D, double d, int n) {
    // One covering circle per equal sector, centered on the bisector: the
    // chord-midpoint circle encloses the sector when its central angle is at
    // least 90 degrees, the triangle circumcircle when it is sharper.
    const double center_radius = n <= 4 ? D * std::cos(kPi / n) : D / (2.0 * std::cos(kPi / n));
    SsaLayout layout;
    layout.camera_radius = d;
    layout.method = SsaMethod::CircularDivision;
    layout.positions.reserve(n);
    for (int j = 0; j < n; ++j) {
        const double angle = (2.0 * j + 1.0) * kPi / n;
        layout.positions.push_back(Vec2{center_radius * std::cos(angle),
                                        center_radius * std::sin(angle)});
    }
    return layout;
}

SsaLayout hexagon_layout(double d, int k) {
    SsaLayout layout;
    layout.camera_radius = d;
    layout.hex_spacing = kSqrt3 * d;
    layout.method = SsaMethod::Hexagonal;
    layout.hex_layers = k;
    layout.positions.reserve(1 + 3 * k * (k + 1));
    const double s = layout.hex_spacing;
    for (int a = -k; a <= k; ++a) {
        for (int b = -k; b <= k; ++b) {
            if (std::max({std::abs(a), std::abs(b), std::abs(a + b)}) > k) continue;
            layout.positions.push_back(
                Vec2{s * (a + 0.5 * b), s * (kSqrt3 / 2.0) * b});
        }
    }
    return layout;
}

/** Ring index of the lattice cell containing p (hexagon side normals at
    0/60/120 degrees, spacing s, cell 0 on the origin). */
struct AxialCoord {
    int a = 0;
    int b = 0;
};

/** Nearest lattice cell of the sqrt(3)d triangular lattice: axial transform
    followed by cube rounding (the largest rounding error is recomputed from
    the other two so the three cube coordinates keep summing to zero). */
AxialCoord axial_round(const Vec2& p, double s) {
    const double b = 2.0 * p.y / (s * kSqrt3);
    const double a = p.x / s - 0.5 * b;
    double rx = std::round(a);
    double ry = std::round(-a - b);
    double rz = std::round(b);
    const double dx = std::abs(rx - a);
    const double dy = std::abs(ry - (-a - b));
    const double dz = std::abs(rz - b);
    if (dx > dy && dx > dz)
        rx = -ry - rz;
    else if (dy > dz)
        ry = -rx - rz;
    else
        rz = -rx - ry;
    return {static_cast<int>(rx), static_cast<int>(rz)};
}

Vec2 lattice_center(AxialCoord c, double s) {
    return {s * (c.a + 0.5 * c.b), s * (kSqrt3 / 2.0) * c.b};
}

bool inside_hexagon(const Vec2& q, double circumradius) {
    const double h = kSqrt3 / 2.0 * circumradius;
    if (std::abs(q.x) > h) return false;
    const double t = kSqrt3 / 2.0 * q.y;
    return std::abs(0.5 * q.x + t) <= h && std::abs(-0.5 * q.x + t) <= h;
}

}  // namespace

SsaLayout ssa_layout(double D, double d, LayerRule rule) {
    check_ratio_inputs(D, d);
    const double x = D / d;
    if (x <= 1.0) {
        SsaLayout layout;
        layout.camera_radius = d;
        layout.method = SsaMethod::Single;
        layout.positions.push_back(Vec2{0.0, 0.0});
        return layout;
    }
    if (x <= 2.0 * kSqrt3 / 3.0) return sector_layout(D, d, 3);
    if (x <= std::sqrt(2.0)) return sector_layout(D, d, 4);
    if (x <= 2.0 * std::cos(kPi / 5.0)) return sector_layout(D, d, 5);
    const int k = rule == LayerRule::ExactCover ? exact_layers(x) : midpoint_layers(x);
    return hexagon_layout(d, k);
}

CoverageReport verify_disk_coverage(const SsaLayout& layout, double D,
                                    std::uint64_t samples, std::uint64_t seed) {
    if (layout.positions.empty())
        throw std::invalid_argument("disk coverage: layout has no positions");
    if (!(layout.camera_radius > 0.0))
        throw std::invalid_argument("disk coverage: camera range must be > 0");
    if (!(D >= 0.0)) throw std::invalid_argument("disk coverage: fire radius must be >= 0");
    if (samples < 1) throw std::invalid_argument("disk coverage: samples must be >= 1");

    const bool hexagonal = layout.method == SsaMethod::Hexagonal;
    bool tiling =
        hexagonal &&
        std::abs(layout.hex_spacing - kSqrt3 * layout.camera_radius) <=
            1e-12 * layout.camera_radius;
    const double reach =
        hexagonal ? kSqrt3 / 2.0 * layout.camera_radius : layout.camera_radius;

    // O(1) point location for honest lattice layouts: a presence grid over
    // the axial coordinates of the emitted positions. A sample is covered
    // exactly when the center of its Voronoi cell is on the list, so missing
    // or moved drones are detected; off-lattice positions drop to the
    // per-hexagon slow path instead of being silently snapped.
    int grid_radius = 0;
    std::vector<char> present;
    if (tiling) {
        std::vector<AxialCoord> coords;
        coords.reserve(layout.positions.size());
        for (const Vec2& c : layout.positions) {
            const AxialCoord axial = axial_round(c, layout.hex_spacing);
            const Vec2 snapped = lattice_center(axial, layout.hex_spacing);
            if (dist(c, snapped) > 1e-9 * layout.hex_spacing) {
                tiling = false;
                break;
            }
            coords.push_back(axial);
            grid_radius = std::max({grid_radius, std::abs(axial.a), std::abs(axial.b),
                                    std::abs(axial.a + axial.b)});
        }
        if (tiling) {
            const int side = 2 * grid_radius + 1;
            present.assign(static_cast<std::size_t>(side) * side, 0);
            for (const AxialCoord c : coords)
                present[static_cast<std::size_t>(c.a + grid_radius) * side +
                        (c.b + grid_radius)] = 1;
        }
    }

    const Rng rng(seed, streams::kDiskCoverage);
    CoverageReport report;
    std::uint64_t uncovered = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double rad = D * std::sqrt(rng.uniform(2 * i));
        const double ang = 2.0 * kPi * rng.uniform(2 * i + 1);
        const Vec2 p{rad * std::cos(ang), rad * std::sin(ang)};

        bool covered;
        if (tiling) {
            const AxialCoord c = axial_round(p, layout.hex_spacing);
            const int side = 2 * grid_radius + 1;
            covered = std::abs(c.a) <= grid_radius && std::abs(c.b) <= grid_radius &&
                      present[static_cast<std::size_t>(c.a + grid_radius) * side +
                              (c.b + grid_radius)] != 0;
        } else if (hexagonal) {
            covered = false;
            for (const Vec2& c : layout.positions) {
                if (inside_hexagon(Vec2{p.x - c.x, p.y - c.y}, layout.camera_radius)) {
                    covered = true;
                    break;
                }
            }
        } else {
            covered = false;
            for (const Vec2& c : layout.positions) {
                if (dist(p, c) <= layout.camera_radius) {
                    covered = true;
                    break;
                }
            }
        }
        if (covered) continue;

        ++uncovered;
        double nearest = std::numeric_limits<double>::infinity();
        for (const Vec2& c : layout.positions) nearest = std::min(nearest, dist(p, c));
        const double margin = nearest - reach;
        if (margin > report.worst_margin) {
            report.worst_margin = margin;
            report.worst_uncovered = p;
        }
    }
    report.uncovered_fraction =
        static_cast<double>(uncovered) / static_cast<double>(samples);
    report.covered = uncovered == 0;
    return report;
}

}  // namespace firefleet
