#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

namespace firefleet {

using Rational = boost::rational<std::int64_t>;

/** Fire-scale rating from the fire radius: 1 for D <= 10 km, 2 strictly
    between, 3 for D >= 40 km. Negative radii are rejected. */
int classify_rating(double radius_km);

/** Row-stochastic 3x3 chain over ratings {1, 2, 3}, kept in exact rationals
    alongside the transition counts it was fitted from. */
struct TransitionMatrix {
    std::array<std::array<Rational, 3>, 3> p{};
    std::array<std::array<std::int64_t, 3>, 3> counts{};
    std::array<bool, 3> unobserved_rows{};  ///< rows that fell back to uniform

    bool any_unobserved() const {
        return unobserved_rows[0] || unobserved_rows[1] || unobserved_rows[2];
    }
};

/** Maximum-likelihood fit p_ij = count(i->j) / count(i->*). Rows with no
    outgoing observations become uniform and are flagged. Ratings outside
    {1, 2, 3} or fewer than two entries are rejected. */
TransitionMatrix fit_transition_matrix(const std::vector<int>& ratings);

/** True iff some power P^k, k <= max_power, is strictly positive
    (checked on the positivity pattern, so exact). */
bool is_regular(const TransitionMatrix& matrix, int max_power = 8);

/**
 * The unique pi with pi * P = pi and sum(pi) = 1, solved exactly in rational
 * arithmetic. Requires a regular chain (std::domain_error otherwise: the
 * limit would not be unique or not exist). The solution is cross-checked
 * against a row of the float P^1000.
 */
std::array<Rational, 3> stationary_distribution(const TransitionMatrix& matrix);

/** Distribution after k steps starting from `start` in {1, 2, 3}: the
    start-indicator row times P^k, evaluated in floating point. */
std::array<double, 3> k_step_distribution(const TransitionMatrix& matrix, int start,
                                          std::uint64_t k);

}  // namespace firefleet
