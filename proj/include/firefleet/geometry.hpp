#pragma once

#include <cmath>

namespace firefleet {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

inline double dist(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

/** A point in kilometres; z is altitude above the reference plane (z >= 0). */
struct Position3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double horizontal_radius() const { return std::hypot(x, y); }
};

inline double dist(const Position3& a, const Position3& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace firefleet
