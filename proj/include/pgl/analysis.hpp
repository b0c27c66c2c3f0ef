#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pgl/equilibrium.hpp"
#include "pgl/params.hpp"

namespace pgl {

/// Bounds on the optimal social cost J*. The lower bound C is exact for
/// every allocation; the upper bound is the best uniform allocation found.
struct OptimumBounds {
    double opt_lower = 0.0;
    double opt_upper = 0.0;
    std::size_t argmin_n = 1;
};

OptimumBounds optimal_social_cost(const GameParams& params, std::size_t n_max = kDefaultNMax);

struct PoaReport {
    std::size_t worst_ess_n = 1;
    std::size_t ess_count = 0;
    double worst_ess_cost = 0.0;
    double opt_lower = 0.0;
    double opt_upper = 0.0;
    std::size_t opt_argmin_n = 1;
    double poa_lower = 0.0;           // worst / opt_upper
    double poa_upper_estimate = 0.0;  // worst / opt_lower
    double theorem_bound = 0.0;       // 3/C + R0
    double ess_cost_bound = 0.0;      // max{2, C R0 + 1}
    bool bound_satisfied = false;
    bool ess_cost_bound_satisfied = false;
};

/// Price of anarchy for a selfish population. The enumeration is complete
/// because every selfish ESS uses at most M_G <= n_max locations. Throws
/// DomainError if n_max < M_G.
PoaReport selfish_poa(const GameParams& params, std::size_t n_max = kDefaultNMax);

inline constexpr double kCertificateSlack = 1e-9;

struct AltruisticRatio {
    std::size_t k = 0;
    bool is_ess = false;
    double social = 0.0;
    double opt_upper = 0.0;
    double ratio = 0.0;   // social / opt_upper, a lower bound on PoA
    double floor = 0.0;   // K C / (C + 1)
    std::optional<std::string> error;
};

/// Social cost of the uniform altruistic ESS on K locations relative to the
/// best uniform allocation with at most n_max locations. Entries whose K is
/// not an altruistic ESS carry an error marker instead of a ratio.
std::vector<AltruisticRatio> altruistic_poa_growth(const GameParams& params,
                                                   const std::vector<std::size_t>& support_sizes,
                                                   std::size_t n_max = kDefaultNMax);

}  // namespace pgl
