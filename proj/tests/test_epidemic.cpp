#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "pgl/epidemic.hpp"
#include "pgl/errors.hpp"

using pgl::GameParams;

namespace {

// R(1) at r0 = 2, eta = 0.01, from a 40-digit bisection of the final-size relation.
constexpr double kR1 = 0.80020396767679926;

struct RandomCase {
    double r0, eta, x;
};

std::vector<RandomCase> random_cases(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_r0(std::log(0.2), std::log(8.0));
    std::uniform_real_distribution<double> log_eta(std::log(1e-4), std::log(0.99));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<RandomCase> cases;
    for (int i = 0; i < n; ++i) {
        cases.push_back({std::exp(log_r0(rng)), std::exp(log_eta(rng)), std::max(1e-6, unit(rng))});
    }
    return cases;
}

}  // namespace

TEST_CASE("game parameters are validated") {
    CHECK_THROWS_AS(GameParams::make(0.0, 0.1, 1.0), pgl::DomainError);
    CHECK_THROWS_AS(GameParams::make(2.0, 0.0, 1.0), pgl::DomainError);
    CHECK_THROWS_AS(GameParams::make(2.0, 1.5, 1.0), pgl::DomainError);
    CHECK_THROWS_AS(GameParams::make(2.0, 0.1, -1.0), pgl::DomainError);
    CHECK_THROWS_AS(GameParams::make(NAN, 0.1, 1.0), pgl::DomainError);
    CHECK_NOTHROW(GameParams::make(2.0, 1.0, 1.0));
    CHECK(GameParams::disease_free(2.0, 1.0).eta() == 0.0);
}

TEST_CASE("final_size examples") {
    SUBCASE("everyone infected when eta = 1") {
        const auto sol = pgl::final_size(0.5, GameParams::make(2.0, 1.0, 1.0));
        CHECK(sol.r_inf == 0.5);
        CHECK(sol.p == 1.0);
        CHECK(sol.r_prime == 1.0);
        CHECK(sol.r_double_prime == 0.0);
    }
    SUBCASE("unit density, r0 = 2, eta = 0.01") {
        const auto params = GameParams::make(2.0, 0.01, 1.0);
        const auto sol = pgl::final_size(1.0, params);
        CHECK(sol.r_inf == doctest::Approx(kR1).epsilon(1e-13));
        CHECK(sol.r_inf == doctest::Approx(oracle::final_size(1.0, 2.0, 0.01)).epsilon(1e-13));
        CHECK(sol.residual <= pgl::kResidualTolerance);
    }
    SUBCASE("slope eta at the origin") {
        const auto sol = pgl::final_size(1e-8, GameParams::make(2.0, 0.3, 1.0));
        CHECK(std::abs(sol.r_inf / 1e-8 - 0.3) <= 1e-7);
    }
    SUBCASE("disease-free diagnostic") {
        const auto sol = pgl::final_size(0.7, GameParams::disease_free(3.0, 1.0));
        CHECK(sol.r_inf == 0.0);
        CHECK(sol.p == 0.0);
        CHECK(pgl::attack_probability(0.0, GameParams::disease_free(3.0, 1.0)) == 0.0);
    }
}

TEST_CASE("final_size rejects non-positive densities") {
    const auto params = GameParams::make(2.0, 0.1, 1.0);
    CHECK_THROWS_AS(pgl::final_size(0.0, params), pgl::DomainError);
    CHECK_THROWS_AS(pgl::final_size(-0.1, params), pgl::DomainError);
    CHECK_THROWS_AS(pgl::final_size(NAN, params), pgl::DomainError);
    CHECK_THROWS_AS(pgl::attack_probability(-1.0, params), pgl::DomainError);
}

TEST_CASE("attack_probability examples") {
    CHECK(pgl::attack_probability(0.0, GameParams::make(3.0, 0.2, 1.0)) == 0.2);
    CHECK(pgl::attack_probability(0.7, GameParams::make(3.0, 1.0, 1.0)) == 1.0);
    CHECK(pgl::attack_probability(1.0, GameParams::make(2.0, 0.01, 1.0)) ==
          doctest::Approx(kR1).epsilon(1e-13));
}

TEST_CASE("first derivative") {
    const auto params = GameParams::make(2.0, 0.05, 1.0);
    CHECK(pgl::final_size_derivative(0.0, 0.0, params) == 0.05);

    for (double eta : {0.001, 0.05, 0.5}) {
        const auto p = GameParams::make(2.0, eta, 1.0);
        CHECK(std::abs(pgl::final_size(0.5, p).r_prime - 1.0) <= 1e-8);
    }

    auto r = [](double x) { return oracle::final_size(x, 2.0, 0.05); };
    const double fd = oracle::central_first(r, 0.5, 1e-6);
    CHECK(std::abs(pgl::final_size(0.5, params).r_prime - fd) <= 1e-5);
}

TEST_CASE("derivatives reject off-branch inputs") {
    const auto params = GameParams::make(2.0, 0.01, 1.0);
    // R = 0 at x = 1 is the unstable branch: 1 - x R0 (1-eta) < 0.
    CHECK_THROWS_AS(pgl::final_size_derivative(1.0, 0.0, params), pgl::SingularityError);
    CHECK_THROWS_AS(pgl::final_size_second_derivative(1.0, 0.0, 1.0, params), pgl::SingularityError);
}

TEST_CASE("second derivative") {
    CHECK(pgl::final_size_second_derivative(0.0, 0.0, 0.1, GameParams::make(2.0, 0.1, 1.0)) ==
          doctest::Approx(0.36).epsilon(1e-15));
    CHECK(pgl::final_size_second_derivative(0.0, 0.0, 1.0, GameParams::make(2.0, 1.0, 1.0)) == 0.0);

    const auto params = GameParams::make(2.0, 0.05, 1.0);
    auto r = [](double x) { return oracle::final_size(x, 2.0, 0.05); };
    const double fd = oracle::central_second(r, 0.2, 1e-4);
    CHECK(std::abs(pgl::final_size(0.2, params).r_double_prime - fd) <= 1e-3);
}

TEST_CASE("attack probability derivative") {
    const auto params = GameParams::make(2.0, 0.05, 1.0);
    for (int k = 1; k <= 50; ++k) {
        const double x = 0.5 * k / 50.0;
        CHECK(pgl::attack_probability_derivative(x, params) <= 2.0);
    }
    CHECK(pgl::attack_probability_derivative(0.4, GameParams::make(2.0, 1.0, 1.0)) == 0.0);
    CHECK(pgl::attack_probability_derivative(0.0, params) == doctest::Approx(0.95 * 2.0 * 0.05));

    auto p = [](double x) { return oracle::final_size(x, 2.0, 0.05) / x; };
    const double fd = oracle::central_first(p, 0.3, 1e-6);
    CHECK(std::abs(pgl::attack_probability_derivative(0.3, params) - fd) <= 1e-5);
}

TEST_CASE("final-size invariants on random parameters") {
    for (const auto& c : random_cases(400, 20211214)) {
        CAPTURE(c.r0);
        CAPTURE(c.eta);
        CAPTURE(c.x);
        const auto params = GameParams::make(c.r0, c.eta, 1.0);
        const auto sol = pgl::final_size(c.x, params);
        CHECK(sol.residual <= 1e-10);
        CHECK(sol.r_inf >= c.eta * c.x * (1.0 - 1e-15));
        CHECK(sol.r_inf <= c.x);
        CHECK(sol.p == sol.r_inf / c.x);
        CHECK(sol.p >= c.eta * (1.0 - 1e-15));
        CHECK(sol.p <= 1.0);
        // Stable branch.
        CHECK(1.0 - c.x * c.r0 * (1.0 - c.eta) * std::exp(-c.r0 * sol.r_inf) > 0.0);
        CHECK(sol.r_inf == doctest::Approx(oracle::final_size(c.x, c.r0, c.eta)).epsilon(1e-12));
    }
}

TEST_CASE("final size is monotone in x, eta and r0") {
    const std::vector<double> grid{0.05, 0.1, 0.2, 0.35, 0.5, 0.7, 0.85, 1.0};
    const std::vector<double> etas{0.001, 0.01, 0.1, 0.5, 0.9};
    const std::vector<double> r0s{0.5, 1.0, 2.0, 4.0};
    for (double r0 : r0s) {
        for (double eta : etas) {
            const auto params = GameParams::make(r0, eta, 1.0);
            for (std::size_t i = 1; i < grid.size(); ++i) {
                const auto lo = pgl::final_size(grid[i - 1], params);
                const auto hi = pgl::final_size(grid[i], params);
                CHECK(hi.r_inf >= lo.r_inf);
                CHECK(hi.p >= lo.p);
            }
        }
    }
    for (double x : grid) {
        for (double r0 : r0s) {
            for (std::size_t j = 1; j < etas.size(); ++j) {
                CHECK(pgl::final_size(x, GameParams::make(r0, etas[j], 1.0)).r_inf >=
                      pgl::final_size(x, GameParams::make(r0, etas[j - 1], 1.0)).r_inf);
            }
        }
        for (double eta : etas) {
            for (std::size_t j = 1; j < r0s.size(); ++j) {
                CHECK(pgl::final_size(x, GameParams::make(r0s[j], eta, 1.0)).p >=
                      pgl::final_size(x, GameParams::make(r0s[j - 1], eta, 1.0)).p);
            }
        }
    }
}

TEST_CASE("derivatives agree with finite differences of the oracle") {
    for (double r0 : {0.5, 1.0, 2.0, 4.0}) {
        for (double eta : {0.001, 0.01, 0.1, 0.5}) {
            const auto params = GameParams::make(r0, eta, 1.0);
            auto r = [&](double x) { return oracle::final_size(x, r0, eta); };
            for (double x : {0.05, 0.25, 0.5, 0.75, 0.99}) {
                const auto sol = pgl::final_size(x, params);
                CHECK(std::abs(sol.r_prime - oracle::central_first(r, x, 1e-6)) <= 1e-5);
                CHECK(std::abs(sol.r_double_prime - oracle::central_second(r, x, 1e-4)) <=
                      1e-3 * std::max(1.0, std::abs(sol.r_double_prime)));
            }
        }
    }
}

TEST_CASE("unit slope threshold at 1/r0") {
    for (double r0 : {0.5, 1.0, 2.0, 4.0}) {
        for (double eta : {0.001, 0.01, 0.1, 0.5}) {
            const auto params = GameParams::make(r0, eta, 1.0);
            const double t = 1.0 / r0;
            CHECK(std::abs(pgl::final_size(t, params).r_prime - 1.0) <= 1e-8);
            for (double f : {0.1, 0.5, 0.9, 0.999}) {
                CHECK(pgl::final_size(f * t, params).r_prime < 1.0);
            }
            for (double f : {1.001, 1.1, 1.5, 2.0}) {
                CHECK(pgl::final_size(f * t, params).r_prime > 1.0);
            }
        }
    }
}

TEST_CASE("curvature is positive near the origin") {
    for (double r0 : {0.5, 2.0, 4.0}) {
        for (double eta : {0.001, 0.1, 0.5}) {
            const auto params = GameParams::make(r0, eta, 1.0);
            for (int k = 1; k <= 20; ++k) {
                CHECK(pgl::final_size(1e-3 * k, params).r_double_prime > 0.0);
            }
        }
    }
}

TEST_CASE("simulate_sir") {
    SUBCASE("eta = 1 recovers everyone") {
        const auto traj = pgl::simulate_sir(1.0, GameParams::make(2.0, 1.0, 1.0));
        CHECK(traj.extinct);
        CHECK(traj.terminal_r == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("matches the transcendental solver") {
        const auto params = GameParams::make(2.0, 0.01, 1.0);
        const auto traj = pgl::simulate_sir(1.0, params);
        REQUIRE(traj.extinct);
        CHECK_FALSE(traj.warning.has_value());
        CHECK(traj.i.back() < 1e-10);
        CHECK(std::abs(traj.terminal_r - pgl::final_size(1.0, params).r_inf) <= 1e-6);
    }
    SUBCASE("conservation and monotonicity") {
        const auto traj = pgl::simulate_sir(1.0, GameParams::make(2.0, 0.01, 1.0));
        for (std::size_t k = 0; k < traj.times.size(); ++k) {
            CHECK(std::abs(traj.s[k] + traj.i[k] + traj.r[k] - 1.0) <= 1e-9);
            CHECK(traj.i[k] >= 0.0);
            if (k > 0) {
                CHECK(traj.times[k] > traj.times[k - 1]);
                CHECK(traj.s[k] <= traj.s[k - 1]);
                CHECK(traj.r[k] >= traj.r[k - 1]);
            }
        }
    }
    SUBCASE("short horizon is flagged") {
        pgl::SirOptions opts;
        opts.horizon = 1.0;
        const auto traj = pgl::simulate_sir(1.0, GameParams::make(2.0, 0.01, 1.0), opts);
        CHECK_FALSE(traj.extinct);
        CHECK(traj.warning.has_value());
        CHECK(traj.times.back() == doctest::Approx(1.0));
    }
    SUBCASE("bad inputs") {
        const auto params = GameParams::make(2.0, 0.01, 1.0);
        CHECK_THROWS_AS(pgl::simulate_sir(0.0, params), pgl::DomainError);
        pgl::SirOptions opts;
        opts.horizon = -1.0;
        CHECK_THROWS_AS(pgl::simulate_sir(1.0, params, opts), pgl::DomainError);
    }
}
