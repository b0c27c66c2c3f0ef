#include "pgl/epidemic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pgl/errors.hpp"

namespace pgl {

namespace {

void require_density(double x, bool allow_zero) {
    if (!std::isfinite(x) || x < 0.0 || (!allow_zero && x == 0.0)) {
        std::ostringstream os;
        os << "density must be " << (allow_zero ? "nonnegative" : "positive")
           << " and finite, got " << x;
        throw DomainError(os.str());
    }
}

// (1 - eta) exp(-R0 R): the surviving-susceptible fraction at final size R.
double susceptible_factor(double r_inf, const GameParams& params) {
    return (1.0 - params.eta()) * std::exp(-params.r0() * r_inf);
}

// 1 - (1 - eta) exp(-R0 R) without cancellation for small R.
double infected_factor(double r_inf, const GameParams& params) {
    const double eta = params.eta();
    return eta - (1.0 - eta) * std::expm1(-params.r0() * r_inf);
}

double stable_branch_denominator(double x, double r_inf, const GameParams& params) {
    const double den = 1.0 - x * params.r0() * susceptible_factor(r_inf, params);
    if (!(den >= kDenominatorGuard)) {
        std::ostringstream os;
        os << "implicit derivative denominator " << den << " at x=" << x << ", R=" << r_inf
           << " is below the stable-branch guard";
        throw SingularityError(os.str(), den);
    }
    return den;
}

}  // namespace

FinalSizeSolution final_size(double x, const GameParams& params) {
    require_density(x, false);

    FinalSizeSolution sol;
    sol.x = x;
    if (params.is_disease_free()) {
        return sol;
    }
    if (params.is_fully_infected()) {
        sol.r_inf = x;
        sol.p = 1.0;
        sol.r_prime = 1.0;
        sol.r_double_prime = 0.0;
        return sol;
    }

    const double eta = params.eta();
    const double r0 = params.r0();
    auto g = [&](double r) { return x * infected_factor(r, params) - r; };

    // g is concave with g(eta x) >= 0 > g(x): exactly one root in the bracket.
    double lo = eta * x;
    double hi = x;
    for (int k = 0; k < kMaxBisection && hi - lo > kBracketWidth; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (hi - lo > kBracketWidth) {
        throw SolverError("final-size bisection did not reach the bracket width", lo, hi);
    }

    double r = 0.5 * (lo + hi);
    for (int k = 0; k < kMaxNewton; ++k) {
        const double gr = g(r);
        if (gr == 0.0) {
            break;
        }
        if (gr > 0.0) {
            lo = r;
        } else {
            hi = r;
        }
        const double slope = x * r0 * susceptible_factor(r, params) - 1.0;
        double next = r - gr / slope;
        if (!(next >= lo && next <= hi)) {
            next = 0.5 * (lo + hi);
        }
        const bool done = std::abs(next - r) <= 2.0 * std::numeric_limits<double>::epsilon() * std::abs(r);
        r = next;
        if (done) {
            break;
        }
    }

    sol.r_inf = r;
    sol.p = r / x;
    sol.residual = std::abs(r - (x - (1.0 - eta) * x * std::exp(-r0 * r)));
    if (sol.residual > kResidualTolerance) {
        std::ostringstream os;
        os << "final-size Newton polish left residual " << sol.residual << " at x=" << x;
        throw SolverError(os.str(), lo, hi);
    }
    sol.r_prime = final_size_derivative(x, r, params);
    sol.r_double_prime = final_size_second_derivative(x, r, sol.r_prime, params);
    return sol;
}

double attack_probability(double x, const GameParams& params) {
    require_density(x, true);
    if (x == 0.0) {
        return params.eta();
    }
    return final_size(x, params).p;
}

double final_size_derivative(double x, double r_inf, const GameParams& params) {
    require_density(x, true);
    if (params.is_disease_free()) {
        return 0.0;
    }
    if (params.is_fully_infected()) {
        return 1.0;
    }
    if (x == 0.0) {
        return params.eta();
    }
    const double den = stable_branch_denominator(x, r_inf, params);
    return infected_factor(r_inf, params) / den;
}

double final_size_second_derivative(double x, double r_inf, double r_prime,
                                    const GameParams& params) {
    require_density(x, true);
    if (params.is_disease_free() || params.is_fully_infected()) {
        return 0.0;
    }
    const double r0 = params.r0();
    if (x == 0.0) {
        const double eta = params.eta();
        return 2.0 * r0 * eta * (1.0 - eta);
    }
    const double den = stable_branch_denominator(x, r_inf, params);
    const double e = susceptible_factor(r_inf, params);
    return e * r0 * r_prime * (2.0 - x * r0 * r_prime) / den;
}

double attack_probability_derivative(double x, const GameParams& params) {
    require_density(x, true);
    const double eta = params.eta();
    if (x == 0.0) {
        return (1.0 - eta) * params.r0() * eta;
    }
    const auto sol = final_size(x, params);
    return (1.0 - sol.p) * params.r0() * sol.r_prime;
}

SirTrajectory simulate_sir(double x, const GameParams& params, const SirOptions& options) {
    require_density(x, false);
    if (!(options.horizon > 0.0) || !(options.step > 0.0) || options.record_every < 1) {
        throw DomainError("simulate_sir needs horizon > 0, step > 0 and record_every >= 1");
    }

    // gamma = 1, beta = R0: time is measured in recovery periods.
    const double beta = params.r0();
    struct State {
        double s, i, r;
    };
    auto rhs = [beta](const State& y) {
        const double infection = beta * y.i * y.s;
        return State{-infection, infection - y.i, y.i};
    };
    auto axpy = [](const State& y, double h, const State& k) {
        return State{y.s + h * k.s, y.i + h * k.i, y.r + h * k.r};
    };

    State y{(1.0 - params.eta()) * x, params.eta() * x, 0.0};
    double t = 0.0;

    SirTrajectory traj;
    auto record = [&] {
        traj.times.push_back(t);
        traj.s.push_back(y.s);
        traj.i.push_back(y.i);
        traj.r.push_back(y.r);
    };
    record();

    auto extinct = [&] { return y.i < options.extinction_threshold && beta * y.s < 1.0; };

    long step_index = 0;
    bool recorded_last = true;
    while (t < options.horizon) {
        if (options.stop_at_extinction && extinct()) {
            break;
        }
        const double h = std::min(options.step, options.horizon - t);
        const State k1 = rhs(y);
        const State k2 = rhs(axpy(y, 0.5 * h, k1));
        const State k3 = rhs(axpy(y, 0.5 * h, k2));
        const State k4 = rhs(axpy(y, h, k3));
        y.s += h / 6.0 * (k1.s + 2.0 * k2.s + 2.0 * k3.s + k4.s);
        y.i += h / 6.0 * (k1.i + 2.0 * k2.i + 2.0 * k3.i + k4.i);
        y.r += h / 6.0 * (k1.r + 2.0 * k2.r + 2.0 * k3.r + k4.r);
        ++step_index;
        t = (h == options.step) ? step_index * options.step : options.horizon;
        recorded_last = step_index % options.record_every == 0;
        if (recorded_last) {
            record();
        }
    }
    if (!recorded_last) {
        record();
    }

    traj.terminal_r = y.r;
    traj.extinct = y.i < options.extinction_threshold;
    if (!traj.extinct) {
        std::ostringstream os;
        os << "horizon " << options.horizon << " too short: infected mass " << y.i
           << " is above the extinction threshold " << options.extinction_threshold;
        traj.warning = os.str();
    }
    return traj;
}

}  // namespace pgl
