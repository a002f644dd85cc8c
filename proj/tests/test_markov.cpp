#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "firefleet/markov.hpp"

using namespace firefleet;

namespace {

const std::vector<int> kRatings = {3, 1, 3, 2, 2, 3, 1, 3, 1, 3, 3, 1, 3, 2, 2,
                                   2, 1, 2, 1, 3, 2, 3, 1, 1, 2, 2, 1, 1, 3, 3};

}  // namespace

TEST_CASE("rating classification by fire radius") {
    CHECK(classify_rating(0.0) == 1);
    CHECK(classify_rating(10.0) == 1);   // class 1 is radius <= 10 km
    CHECK(classify_rating(10.0001) == 2);
    CHECK(classify_rating(39.999) == 2);
    CHECK(classify_rating(40.0) == 3);   // class 3 is radius >= 40 km
    CHECK(classify_rating(500.0) == 3);
    CHECK_THROWS_AS(classify_rating(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(classify_rating(std::nan("")), std::invalid_argument);
}

TEST_CASE("transition fit reproduces the reference matrix exactly") {
    const TransitionMatrix fit = fit_transition_matrix(kRatings);
    const Rational expect[3][3] = {{{1, 5}, {1, 5}, {3, 5}},
                                   {{1, 3}, {4, 9}, {2, 9}},
                                   {{1, 2}, {3, 10}, {1, 5}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(fit.p[i][j] == expect[i][j]);
    CHECK_FALSE(fit.any_unobserved());

    // Row sums are exactly one in rational arithmetic.
    for (int i = 0; i < 3; ++i)
        CHECK(fit.p[i][0] + fit.p[i][1] + fit.p[i][2] == Rational(1));
}

TEST_CASE("transition counts agree with an independent pair recount") {
    const TransitionMatrix fit = fit_transition_matrix(kRatings);
    std::map<std::pair<int, int>, std::int64_t> recount;
    for (std::size_t i = 0; i + 1 < kRatings.size(); ++i)
        ++recount[{kRatings[i], kRatings[i + 1]}];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(fit.counts[i][j] == recount[{i + 1, j + 1}]);
}

TEST_CASE("fit input validation") {
    CHECK_THROWS_AS(fit_transition_matrix({}), std::invalid_argument);
    CHECK_THROWS_AS(fit_transition_matrix({2}), std::invalid_argument);
    CHECK_THROWS_AS(fit_transition_matrix({1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(fit_transition_matrix({0, 1}), std::invalid_argument);
}

TEST_CASE("rows with no outgoing observations become uniform and are flagged") {
    const TransitionMatrix fit = fit_transition_matrix({1, 1, 1});
    CHECK(fit.p[0][0] == Rational(1));
    for (int j = 0; j < 3; ++j) {
        CHECK(fit.p[1][j] == Rational(1, 3));
        CHECK(fit.p[2][j] == Rational(1, 3));
    }
    CHECK_FALSE(fit.unobserved_rows[0]);
    CHECK(fit.unobserved_rows[1]);
    CHECK(fit.unobserved_rows[2]);
    CHECK(fit.any_unobserved());
}

TEST_CASE("regularity detection") {
    CHECK(is_regular(fit_transition_matrix(kRatings)));
    // State 1 is absorbing here, so no power of P is strictly positive.
    CHECK_FALSE(is_regular(fit_transition_matrix({1, 1, 1})));
    CHECK_THROWS_AS(stationary_distribution(fit_transition_matrix({1, 1, 1})),
                    std::domain_error);
}

TEST_CASE("stationary distribution is exactly (10/29, 9/29, 10/29)") {
    const TransitionMatrix fit = fit_transition_matrix(kRatings);
    const std::array<Rational, 3> pi = stationary_distribution(fit);
    CHECK(pi[0] == Rational(10, 29));
    CHECK(pi[1] == Rational(9, 29));
    CHECK(pi[2] == Rational(10, 29));

    // pi * P = pi, exactly.
    for (int j = 0; j < 3; ++j) {
        Rational acc(0);
        for (int i = 0; i < 3; ++i) acc += pi[i] * fit.p[i][j];
        CHECK(acc == pi[j]);
    }
}

TEST_CASE("k-step distribution converges to the stationary law") {
    const TransitionMatrix fit = fit_transition_matrix(kRatings);
    for (int start : {1, 2, 3}) {
        const std::array<double, 3> row = k_step_distribution(fit, start, 200);
        CHECK(row[0] == doctest::Approx(10.0 / 29.0).epsilon(1e-9));
        CHECK(row[1] == doctest::Approx(9.0 / 29.0).epsilon(1e-9));
        CHECK(row[2] == doctest::Approx(10.0 / 29.0).epsilon(1e-9));
    }
}

TEST_CASE("k-step distribution basic steps") {
    const TransitionMatrix fit = fit_transition_matrix(kRatings);
    const std::array<double, 3> zero = k_step_distribution(fit, 2, 0);
    CHECK(zero[0] == 0.0);
    CHECK(zero[1] == 1.0);
    CHECK(zero[2] == 0.0);
    const std::array<double, 3> one = k_step_distribution(fit, 2, 1);
    for (int j = 0; j < 3; ++j)
        CHECK(one[j] == doctest::Approx(boost::rational_cast<double>(fit.p[1][j]))
                            .epsilon(1e-15));
    CHECK_THROWS_AS(k_step_distribution(fit, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(k_step_distribution(fit, 4, 1), std::invalid_argument);
}
