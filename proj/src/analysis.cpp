#include "pgl/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "pgl/errors.hpp"
#include "pgl/game.hpp"

namespace pgl {

OptimumBounds optimal_social_cost(const GameParams& params, std::size_t n_max) {
    if (n_max == 0) {
        throw DomainError("n_max must be at least 1");
    }
    OptimumBounds out;
    out.opt_lower = params.c();
    out.opt_upper = social_cost(Allocation::uniform(1), params);
    for (std::size_t n = 2; n <= n_max; ++n) {
        const double cost = social_cost(Allocation::uniform(n), params);
        if (cost < out.opt_upper) {
            out.opt_upper = cost;
            out.argmin_n = n;
        }
    }
    return out;
}

PoaReport selfish_poa(const GameParams& params, std::size_t n_max) {
    const auto support = max_selfish_support(params);
    if (n_max < support.max_support) {
        std::ostringstream os;
        os << "n_max " << n_max << " is below the selfish support bound " << support.max_support;
        throw DomainError(os.str());
    }

    PoaReport report;
    const auto records = enumerate_uniform_ess(params, Population::selfish, n_max);
    report.ess_count = records.size();
    for (const auto& rec : records) {
        if (rec.social > report.worst_ess_cost) {
            report.worst_ess_cost = rec.social;
            report.worst_ess_n = rec.support_size;
        }
    }

    const auto opt = optimal_social_cost(params, n_max);
    report.opt_lower = opt.opt_lower;
    report.opt_upper = opt.opt_upper;
    report.opt_argmin_n = opt.argmin_n;
    report.poa_lower = report.worst_ess_cost / opt.opt_upper;
    report.poa_upper_estimate = report.worst_ess_cost / opt.opt_lower;
    report.theorem_bound = 3.0 / params.c() + params.r0();
    report.ess_cost_bound = std::max(2.0, params.c() * params.r0() + 1.0);
    report.bound_satisfied = report.poa_upper_estimate <= report.theorem_bound;
    report.ess_cost_bound_satisfied = report.worst_ess_cost <= report.ess_cost_bound + kCertificateSlack;
    return report;
}

std::vector<AltruisticRatio> altruistic_poa_growth(const GameParams& params,
                                                   const std::vector<std::size_t>& support_sizes,
                                                   std::size_t n_max) {
    const double opt_upper = optimal_social_cost(params, n_max).opt_upper;
    std::vector<AltruisticRatio> out;
    out.reserve(support_sizes.size());
    for (std::size_t k : support_sizes) {
        AltruisticRatio entry;
        entry.k = k;
        entry.opt_upper = opt_upper;
        entry.floor = static_cast<double>(k) * params.c() / (params.c() + 1.0);
        if (k == 0) {
            entry.error = "K must be at least 1";
            out.push_back(entry);
            continue;
        }
        const auto alloc = Allocation::uniform(k);
        const auto report = check_ess(alloc, Population::altruistic, params);
        entry.is_ess = report.verdict();
        if (!entry.is_ess) {
            std::ostringstream os;
            os << "uniform allocation on " << k << " locations is not an altruistic ESS";
            if (!report.violations.empty()) {
                os << " (" << to_string(report.violations.front().kind) << ")";
            }
            entry.error = os.str();
        } else {
            entry.social = social_cost(alloc, params);
            entry.ratio = entry.social / opt_upper;
        }
        out.push_back(entry);
    }
    return out;
}

}  // namespace pgl
