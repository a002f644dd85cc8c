#include "firefleet/heat.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace firefleet {

void HeatMedium::validate() const {
    if (!(conductivity > 0.0)) throw std::invalid_argument("heat medium: conductivity must be > 0");
    if (!(heat_capacity > 0.0)) throw std::invalid_argument("heat medium: heat capacity must be > 0");
    if (!(density > 0.0)) throw std::invalid_argument("heat medium: density must be > 0");
    if (quadrature_steps < 2) throw std::invalid_argument("heat medium: quadrature steps must be >= 2");
    if (impulse && impulse->energy < 0.0) throw std::invalid_argument("heat medium: impulse energy must be >= 0");
    if (source && source->rate < 0.0) throw std::invalid_argument("heat medium: source rate must be >= 0");
}

double heat_kernel(double r2, double alpha, double t) {
    if (t <= 0.0) {
        return r2 == 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    const double at = alpha * t;
    return std::pow(4.0 * std::numbers::pi * at, -1.5) * std::exp(-r2 / (4.0 * at));
}

namespace {

double squared_dist(const Position3& a, const Position3& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return dx * dx + dy * dy + dz * dz;
}

// Composite trapezoid over the emission time s in [0, t]. The integrand is
// the kernel at age t - s; away from the source point it vanishes at s = t,
// at the source point the integral diverges (which the sum faithfully
// reports as a very large value once the kernel blows up).
double source_term(const Position3& p, double t, const HeatMedium& m) {
    const PointSource& src = *m.source;
    if (src.rate == 0.0 || t <= 0.0) return 0.0;
    const double r2 = squared_dist(p, src.at);
    const double alpha = m.diffusivity();
    const int n = m.quadrature_steps;
    const double h = t / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double age = t - i * h;
        const double k = heat_kernel(r2, alpha, age);
        if (std::isinf(k)) return k;
        acc += (i == 0 || i == n) ? 0.5 * k : k;
    }
    return src.rate / (m.heat_capacity * m.density) * acc * h;
}

}  // namespace

double heat_temperature(const Position3& p, double t, const HeatMedium& medium) {
    medium.validate();
    if (t < 0.0) throw std::domain_error("heat temperature: t must be >= 0");

    double temp = medium.ambient;
    if (medium.impulse && medium.impulse->energy > 0.0) {
        temp += medium.impulse->energy *
                heat_kernel(squared_dist(p, medium.impulse->at), medium.diffusivity(), t);
    }
    if (medium.source) temp += source_term(p, t, medium);
    return temp;
}

}  // namespace firefleet
