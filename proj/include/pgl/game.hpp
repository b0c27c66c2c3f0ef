#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pgl/params.hpp"

namespace pgl {

/// A finite-support social allocation. Every listed entry is a used
/// location; a listed zero density is a location used by a measure-zero
/// set of agents. Densities are kept sorted in nonincreasing order.
class Allocation {
public:
    /// Throws DomainError unless every density lies in [0, 1], at least one
    /// location is listed, and the densities sum to 1 within 1e-12.
    static Allocation from_densities(std::vector<double> densities);

    /// n locations at density 1/n each.
    static Allocation uniform(std::size_t n);

    std::span<const double> densities() const noexcept { return densities_; }
    std::size_t support_size() const noexcept { return densities_.size(); }
    std::size_t zero_density_count() const noexcept;

private:
    explicit Allocation(std::vector<double> densities) : densities_(std::move(densities)) {}

    std::vector<double> densities_;
};

inline constexpr double kAllocationSumTolerance = 1e-12;

struct LocationCost {
    double isolation = 0.0;
    double infection = 0.0;
    double total = 0.0;
};

/// C/x; +infinity for an uninhabited location.
double isolation_cost(double x, const GameParams& params);

/// Selfish cost C/x + p(x). Infinite at x = 0.
LocationCost selfish_cost(double x, const GameParams& params);

/// -C/x^2 + p'(x), for x > 0.
double selfish_cost_derivative(double x, const GameParams& params);

/// Altruistic cost: R'(x) at a used location (eta at zero density) and the
/// switching charge C + eta at an empty one. `used == false` requires x = 0.
double altruistic_cost(double x, bool used, const GameParams& params);

/// Gradient of the altruistic cost at a used location: R''(x).
double altruistic_cost_derivative(double x, const GameParams& params);

/// C |N(x)| + sum of final sizes over used locations.
double social_cost(const Allocation& alloc, const GameParams& params);

}  // namespace pgl
