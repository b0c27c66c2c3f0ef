#include <doctest.h>

#include <algorithm>

#include "pgl/analysis.hpp"
#include "pgl/epidemic.hpp"
#include "pgl/errors.hpp"

using pgl::GameParams;

TEST_CASE("optimal social cost bounds") {
    SUBCASE("everyone infected: one location is best") {
        const auto opt = pgl::optimal_social_cost(GameParams::make(2.0, 1.0, 1.0), 50);
        CHECK(opt.opt_lower == 1.0);
        CHECK(opt.opt_upper == 2.0);
        CHECK(opt.argmin_n == 1);
    }
    SUBCASE("cheap isolation spreads the population") {
        // Grid minimum of C n + n R(1/n), n <= 200, from the 40-digit oracle.
        const auto opt = pgl::optimal_social_cost(GameParams::make(2.0, 0.01, 0.01), 200);
        CHECK(opt.argmin_n == 3);
        CHECK(opt.opt_upper == doctest::Approx(0.058875688968629809).epsilon(1e-12));
    }
    SUBCASE("sandwich across a grid") {
        for (double r0 : {0.5, 1.0, 2.0, 4.0}) {
            for (double eta : {0.001, 0.01, 0.1, 0.5}) {
                for (double c : {0.01, 0.1, 1.0, 5.0}) {
                    const auto opt = pgl::optimal_social_cost(GameParams::make(r0, eta, c), 300);
                    CHECK(opt.opt_lower == c);
                    CHECK(opt.opt_lower <= opt.opt_upper);
                    CHECK(opt.opt_upper <= c + 1.0);
                }
            }
        }
    }
    CHECK_THROWS_AS(pgl::optimal_social_cost(GameParams::make(2.0, 0.1, 1.0), 0), pgl::DomainError);
}

TEST_CASE("selfish price of anarchy") {
    SUBCASE("single equilibrium") {
        const auto rep = pgl::selfish_poa(GameParams::make(2.0, 1.0, 1.0), 100);
        CHECK(rep.ess_count == 1);
        CHECK(rep.worst_ess_n == 1);
        CHECK(rep.worst_ess_cost == 2.0);
        CHECK(rep.poa_upper_estimate == 2.0);
        CHECK(rep.theorem_bound == 5.0);
        CHECK(rep.bound_satisfied);
    }
    SUBCASE("single-location state breaks the cost bound when r0 < 1") {
        const auto rep = pgl::selfish_poa(GameParams::make(0.5, 0.001, 5.0), 300);
        CHECK(rep.worst_ess_n == 1);
        CHECK(rep.worst_ess_cost == doctest::Approx(5.0 + pgl::final_size(1.0, GameParams::make(0.5, 0.001, 5.0)).r_inf));
        CHECK_FALSE(rep.ess_cost_bound_satisfied);
        CHECK(rep.worst_ess_cost <= 5.0 + 1.0);
    }
    SUBCASE("certificates hold across the grid for r0 >= 1") {
        for (double r0 : {1.0, 2.0, 4.0}) {
            for (double eta : {0.001, 0.01, 0.1, 0.5}) {
                for (double c : {0.01, 0.1, 1.0, 5.0}) {
                    const auto rep = pgl::selfish_poa(GameParams::make(r0, eta, c), 300);
                    CHECK(rep.bound_satisfied);
                    CHECK(rep.ess_cost_bound_satisfied);
                    CHECK(rep.worst_ess_cost <= std::max(2.0, c * r0 + 1.0) + 1e-9);
                    CHECK(rep.opt_lower <= rep.opt_upper);
                    CHECK(rep.poa_lower <= rep.poa_upper_estimate);
                }
            }
        }
    }
    SUBCASE("n_max below the support bound is rejected") {
        const auto params = GameParams::make(4.0, 0.5, 0.01);
        REQUIRE(pgl::max_selfish_support(params).max_support > 1);
        CHECK_THROWS_AS(pgl::selfish_poa(params, 1), pgl::DomainError);
    }
}

TEST_CASE("altruistic price of anarchy grows without bound") {
    const auto params = GameParams::make(2.0, 0.01, 0.05);
    const auto rows = pgl::altruistic_poa_growth(params, {1, 100, 200, 400});
    REQUIRE(rows.size() == 4);

    CHECK_FALSE(rows[0].is_ess);
    CHECK(rows[0].error.has_value());

    // Ratios C K + K R(1/K) over the best uniform allocation (n <= 1000),
    // evaluated at 40 digits.
    const double expected[] = {28.009407021475225, 55.961209947069588, 111.86567532101646};
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].is_ess);
        CHECK_FALSE(rows[i].error.has_value());
        CHECK(rows[i].ratio == doctest::Approx(expected[i - 1]).epsilon(1e-12));
        CHECK(rows[i].ratio >= rows[i].floor);
        CHECK(rows[i].floor == doctest::Approx(rows[i].k * 0.05 / 1.05));
        if (i > 1) {
            CHECK(rows[i].ratio > rows[i - 1].ratio);
            // Doubling K at least roughly doubles the ratio.
            CHECK(rows[i].ratio >= 1.9 * rows[i - 1].ratio);
        }
    }
}
