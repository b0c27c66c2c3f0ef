#include "pgl/game.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "pgl/epidemic.hpp"
#include "pgl/errors.hpp"

namespace pgl {

Allocation Allocation::from_densities(std::vector<double> densities) {
    if (densities.empty()) {
        throw DomainError("an allocation needs at least one used location");
    }
    long double sum = 0.0L;
    for (double d : densities) {
        if (!std::isfinite(d) || d < 0.0 || d > 1.0) {
            std::ostringstream os;
            os << "allocation density " << d << " is outside [0, 1]";
            throw DomainError(os.str());
        }
        sum += d;
    }
    if (std::abs(static_cast<double>(sum - 1.0L)) > kAllocationSumTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "allocation densities sum to " << static_cast<double>(sum) << ", not 1";
        throw DomainError(os.str());
    }
    std::sort(densities.begin(), densities.end(), std::greater<>());
    return Allocation(std::move(densities));
}

Allocation Allocation::uniform(std::size_t n) {
    if (n == 0) {
        throw DomainError("a uniform allocation needs n >= 1");
    }
    return Allocation(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

std::size_t Allocation::zero_density_count() const noexcept {
    return static_cast<std::size_t>(std::count(densities_.begin(), densities_.end(), 0.0));
}

double isolation_cost(double x, const GameParams& params) {
    if (!(x >= 0.0)) {
        throw DomainError("isolation cost needs a nonnegative density");
    }
    if (x == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return params.c() / x;
}

LocationCost selfish_cost(double x, const GameParams& params) {
    LocationCost cost;
    cost.isolation = isolation_cost(x, params);
    cost.infection = attack_probability(x, params);
    cost.total = cost.isolation + cost.infection;
    return cost;
}

double selfish_cost_derivative(double x, const GameParams& params) {
    if (!(x > 0.0)) {
        throw DomainError("selfish cost derivative needs x > 0");
    }
    return -params.c() / (x * x) + attack_probability_derivative(x, params);
}

double altruistic_cost(double x, bool used, const GameParams& params) {
    if (!used) {
        if (x != 0.0) {
            throw DomainError("an empty location has zero density");
        }
        return params.c() + params.eta();
    }
    if (x == 0.0) {
        return final_size_derivative(0.0, 0.0, params);
    }
    return final_size(x, params).r_prime;
}

double altruistic_cost_derivative(double x, const GameParams& params) {
    if (x == 0.0) {
        return final_size_second_derivative(0.0, 0.0, final_size_derivative(0.0, 0.0, params), params);
    }
    return final_size(x, params).r_double_prime;
}

double social_cost(const Allocation& alloc, const GameParams& params) {
    double total = params.c() * static_cast<double>(alloc.support_size());
    // Densities are sorted: solve once per run of equal values.
    const auto densities = alloc.densities();
    for (std::size_t i = 0; i < densities.size();) {
        const double d = densities[i];
        std::size_t j = i;
        while (j < densities.size() && densities[j] == d) {
            ++j;
        }
        if (d > 0.0) {
            const double r_inf = final_size(d, params).r_inf;
            for (std::size_t k = i; k < j; ++k) {
                total += r_inf;
            }
        }
        i = j;
    }
    return total;
}

}  // namespace pgl
