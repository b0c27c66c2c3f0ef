#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgl/params.hpp"

namespace pgl {

// Solver constants.
inline constexpr double kBracketWidth = 1e-8;      // bisection stops here
inline constexpr double kResidualTolerance = 1e-12;  // Newton polish target
inline constexpr double kDenominatorGuard = 1e-12;   // derivative singularity guard
inline constexpr int kMaxBisection = 200;
inline constexpr int kMaxNewton = 50;

/// Final size of the epidemic at a location of density x, with its
/// attack probability and the first two derivatives in x.
struct FinalSizeSolution {
    double x = 0.0;
    double r_inf = 0.0;
    double p = 0.0;
    double residual = 0.0;
    double r_prime = 0.0;
    double r_double_prime = 0.0;
};

/// Solves R = x - (1 - eta) x exp(-R0 R) for the root in [eta x, x].
///
/// Bisection narrows the bracket to kBracketWidth, then a safeguarded
/// Newton iteration polishes to machine precision. Accepts any x > 0;
/// allocations only ever produce x <= 1, but analytic checks at x = 1/R0
/// need x > 1 when R0 < 1.
///
/// Throws DomainError for x <= 0 or non-finite x and SolverError when the
/// residual cannot be brought under kResidualTolerance.
FinalSizeSolution final_size(double x, const GameParams& params);

/// R(x)/x, extended continuously by p(0) = eta.
double attack_probability(double x, const GameParams& params);

/// dR/dx from implicit differentiation of the final-size relation:
///   R' = (1 - (1-eta) e^{-R0 R}) / (1 - x R0 (1-eta) e^{-R0 R}).
/// Returns eta at x = 0. Throws SingularityError if the denominator is
/// below kDenominatorGuard.
double final_size_derivative(double x, double r_inf, const GameParams& params);

/// d^2R/dx^2, isolated from the second implicit derivative:
///   R'' (1 - x R0 E) = E R0 R' (2 - x R0 R'),  E = (1-eta) e^{-R0 R}.
/// Returns 2 R0 eta (1 - eta) at x = 0.
double final_size_second_derivative(double x, double r_inf, double r_prime,
                                    const GameParams& params);

/// dp/dx = (1 - p) R0 R'. Returns (1 - eta) R0 eta at x = 0.
double attack_probability_derivative(double x, const GameParams& params);

struct SirOptions {
    double horizon = 1e5;               // in recovery periods (gamma = 1)
    double step = 0.01;
    double extinction_threshold = 1e-10;
    /// Stop as soon as the infected mass is below the threshold and can
    /// only decrease further (R0 s < 1).
    bool stop_at_extinction = true;
    /// Keep every k-th step in the stored trajectory (the endpoints are
    /// always kept).
    int record_every = 1;
};

struct SirTrajectory {
    std::vector<double> times;
    std::vector<double> s;
    std::vector<double> i;
    std::vector<double> r;
    double terminal_r = 0.0;
    bool extinct = false;
    std::optional<std::string> warning;
};

/// Integrates the density-based SIR model at one location with beta = R0,
/// gamma = 1 using classical fixed-step RK4. Initial state is
/// ((1-eta) x, eta x, 0).
SirTrajectory simulate_sir(double x, const GameParams& params, const SirOptions& options = {});

}  // namespace pgl
