#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgl/game.hpp"
#include "pgl/params.hpp"

namespace pgl {

enum class Population { selfish, altruistic };

std::string_view to_string(Population type);
/// Parses "selfish" or "altruistic"; throws DomainError otherwise.
Population parse_population(std::string_view text);

struct EssTolerances {
    double cost_relative = 1e-9;   // equal-cost and deviation comparisons
    double gradient_absolute = 1e-10;  // stability needs gradient > this
};

enum class ViolationKind {
    cost_mismatch,          // two inhabited locations with different costs
    profitable_deviation,   // an empty location is strictly cheaper
    nonpositive_gradient,   // cost gradient at an inhabited location <= eps
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::size_t location;  // index into Allocation::densities()
    double value;          // offending cost or gradient
    double reference;      // what it was compared against
};

struct EssReport {
    bool is_nash = false;
    bool is_stable = false;
    std::vector<Violation> violations;

    bool verdict() const noexcept { return is_nash && is_stable; }
};

struct EssRecord {
    Population population = Population::selfish;
    std::size_t support_size = 0;
    double density = 0.0;
    double location_cost = 0.0;
    double social = 0.0;
    double stability_margin = 0.0;  // d(cost)/dx at the density
};

/// Location cost seen by the given population at a used location.
double population_cost(Population type, double x, const GameParams& params);
/// Gradient of that cost at a used location with x > 0.
double population_cost_gradient(Population type, double x, const GameParams& params);
/// Cost of moving to an empty location: +infinity (selfish) or C + eta.
double empty_location_cost(Population type, const GameParams& params);

/// Checks both ESS conditions for an arbitrary finite-support allocation.
/// Condition (1) compares every inhabited location against the first and
/// against an empty location (one always exists). Condition (2) applies
/// only when more than one location is used.
EssReport check_ess(const Allocation& alloc, Population type, const GameParams& params,
                    const EssTolerances& tol = {});

inline constexpr std::size_t kDefaultNMax = 1000;

/// Every n in [1, n_max] whose uniform allocation passes check_ess.
std::vector<EssRecord> enumerate_uniform_ess(const GameParams& params, Population type,
                                             std::size_t n_max = kDefaultNMax,
                                             const EssTolerances& tol = {});

struct SelfishSupportBound {
    std::size_t max_support = 1;   // M_G
    std::optional<double> x_bar;   // smallest zero of the selfish gradient
};

/// Sign scan of the selfish cost gradient on a log grid over [1e-6, 1]
/// followed by bisection. x_bar is reported from the negative side of the
/// final bracket, so floor(1/x_bar) never undercounts.
SelfishSupportBound max_selfish_support(const GameParams& params);

struct AltruisticThreshold {
    double a = 0.0;             // R'' > 0 on the sampled grid of (0, a)
    double incentive_density;   // largest x <= a with R'(x) <= C + eta (0 if none)
    std::size_t n0 = 0;         // every uniform n >= n0 is an altruistic ESS (0 if none)
};

/// Largest a <= 1 with R'' > 0 on a sampled grid of (0, a). Throws
/// DegenerateError when R'' vanishes identically (eta = 1 or eta = 0).
double altruistic_stability_interval(const GameParams& params);

/// The stability interval together with the density below which the
/// altruistic incentive constraint holds, and the resulting tail start n0.
AltruisticThreshold altruistic_threshold(const GameParams& params,
                                         const EssTolerances& tol = {});

}  // namespace pgl
