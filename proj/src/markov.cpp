#include "firefleet/markov.hpp"

#include <cmath>
#include <stdexcept>

namespace firefleet {

int classify_rating(double radius_km) {
    if (radius_km < 0.0 || std::isnan(radius_km))
        throw std::invalid_argument("rating: fire radius must be >= 0");
    if (radius_km <= 10.0) return 1;
    if (radius_km < 40.0) return 2;
    return 3;
}

TransitionMatrix fit_transition_matrix(const std::vector<int>& ratings) {
    if (ratings.size() < 2)
        throw std::invalid_argument("markov fit: need at least two ratings");
    for (int r : ratings)
        if (r < 1 || r > 3) throw std::invalid_argument("markov fit: rating outside {1, 2, 3}");

    TransitionMatrix out;
    for (std::size_t s = 0; s + 1 < ratings.size(); ++s)
        ++out.counts[ratings[s] - 1][ratings[s + 1] - 1];

    for (int i = 0; i < 3; ++i) {
        const std::int64_t row_total =
            out.counts[i][0] + out.counts[i][1] + out.counts[i][2];
        if (row_total == 0) {
            out.unobserved_rows[i] = true;
            for (int j = 0; j < 3; ++j) out.p[i][j] = Rational(1, 3);
        } else {
            for (int j = 0; j < 3; ++j) out.p[i][j] = Rational(out.counts[i][j], row_total);
        }
    }
    return out;
}

namespace {

using BoolMatrix = std::array<std::array<bool, 3>, 3>;

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
    BoolMatrix c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) c[i][j] = c[i][j] || (a[i][k] && b[k][j]);
    return c;
}

bool all_positive(const BoolMatrix& a) {
    for (const auto& row : a)
        for (bool v : row)
            if (!v) return false;
    return true;
}

using FloatMatrix = std::array<std::array<double, 3>, 3>;

FloatMatrix float_product(const FloatMatrix& a, const FloatMatrix& b) {
    FloatMatrix c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

FloatMatrix to_float(const TransitionMatrix& m) {
    FloatMatrix f{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) f[i][j] = boost::rational_cast<double>(m.p[i][j]);
    return f;
}

FloatMatrix float_power(FloatMatrix base, std::uint64_t k) {
    FloatMatrix acc{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    while (k > 0) {
        if (k & 1) acc = float_product(acc, base);
        base = float_product(base, base);
        k >>= 1;
    }
    return acc;
}

}  // namespace

bool is_regular(const TransitionMatrix& matrix, int max_power) {
    BoolMatrix pattern{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) pattern[i][j] = matrix.p[i][j] > Rational(0);
    BoolMatrix power = pattern;
    for (int k = 1; k <= max_power; ++k) {
        if (all_positive(power)) return true;
        power = bool_product(power, pattern);
    }
    return false;
}

std::array<Rational, 3> stationary_distribution(const TransitionMatrix& matrix) {
    if (!is_regular(matrix))
        throw std::domain_error("stationary distribution: chain is not regular, no unique limit");

    // Solve pi * P = pi, sum(pi) = 1 exactly: two balance equations plus the
    // normalization, by Gaussian elimination over the rationals.
    std::array<std::array<Rational, 4>, 3> sys{};
    for (int col = 0; col < 2; ++col) {
        for (int i = 0; i < 3; ++i) sys[col][i] = matrix.p[i][col];
        sys[col][col] -= Rational(1);
        sys[col][3] = Rational(0);
    }
    sys[2] = {Rational(1), Rational(1), Rational(1), Rational(1)};

    for (int col = 0; col < 3; ++col) {
        int pivot = -1;
        for (int row = col; row < 3; ++row)
            if (sys[row][col] != Rational(0)) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            throw std::domain_error("stationary distribution: singular balance system");
        std::swap(sys[col], sys[pivot]);
        for (int row = 0; row < 3; ++row) {
            if (row == col || sys[row][col] == Rational(0)) continue;
            const Rational factor = sys[row][col] / sys[col][col];
            for (int k = col; k < 4; ++k) sys[row][k] -= factor * sys[col][k];
        }
    }
    std::array<Rational, 3> pi;
    for (int i = 0; i < 3; ++i) pi[i] = sys[i][3] / sys[i][i];

    const FloatMatrix far = float_power(to_float(matrix), 1000);
    for (int j = 0; j < 3; ++j) {
        if (std::abs(boost::rational_cast<double>(pi[j]) - far[0][j]) > 1e-9)
            throw std::runtime_error(
                "stationary distribution: exact solve disagrees with the 1000-step power");
    }
    return pi;
}

std::array<double, 3> k_step_distribution(const TransitionMatrix& matrix, int start,
                                          std::uint64_t k) {
    if (start < 1 || start > 3)
        throw std::invalid_argument("k-step distribution: start rating outside {1, 2, 3}");
    const FloatMatrix power = float_power(to_float(matrix), k);
    return {power[start - 1][0], power[start - 1][1], power[start - 1][2]};
}

}  // namespace firefleet
