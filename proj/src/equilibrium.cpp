#include "pgl/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pgl/epidemic.hpp"
#include "pgl/errors.hpp"

namespace pgl {

namespace {

bool costs_equal(double a, double b, double rel) {
    return a == b || std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

bool cost_not_above(double cost, double bound, double rel) {
    return cost <= bound || cost - bound <= rel * std::max(std::abs(cost), std::abs(bound));
}

constexpr int kSupportScanPoints = 10000;
constexpr double kSupportScanLow = 1e-6;
constexpr double kSupportBisection = 1e-10;
constexpr int kIntervalScanPoints = 10000;
constexpr double kIntervalBisection = 1e-12;

// Shrinks [near, far] around the point where on_far_side flips, given it is
// false at near and true at far. Returns the near endpoint.
template <class Pred>
double bisect(Pred on_far_side, double near, double far, double width) {
    while (std::abs(far - near) > width) {
        const double mid = 0.5 * (near + far);
        if (on_far_side(mid)) {
            far = mid;
        } else {
            near = mid;
        }
    }
    return near;
}

}  // namespace

std::string_view to_string(Population type) {
    return type == Population::selfish ? "selfish" : "altruistic";
}

Population parse_population(std::string_view text) {
    if (text == "selfish") {
        return Population::selfish;
    }
    if (text == "altruistic") {
        return Population::altruistic;
    }
    throw DomainError("population type must be selfish or altruistic, got '" + std::string(text) + "'");
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::cost_mismatch:
            return "cost_mismatch";
        case ViolationKind::profitable_deviation:
            return "profitable_deviation";
        case ViolationKind::nonpositive_gradient:
            return "nonpositive_gradient";
    }
    return "unknown";
}

double population_cost(Population type, double x, const GameParams& params) {
    return type == Population::selfish ? selfish_cost(x, params).total
                                       : altruistic_cost(x, true, params);
}

double population_cost_gradient(Population type, double x, const GameParams& params) {
    return type == Population::selfish ? selfish_cost_derivative(x, params)
                                       : altruistic_cost_derivative(x, params);
}

double empty_location_cost(Population type, const GameParams& params) {
    return type == Population::selfish ? std::numeric_limits<double>::infinity()
                                       : altruistic_cost(0.0, false, params);
}

EssReport check_ess(const Allocation& alloc, Population type, const GameParams& params,
                    const EssTolerances& tol) {
    EssReport report;
    report.is_nash = true;
    report.is_stable = true;

    const double empty = empty_location_cost(type, params);
    const bool needs_stability = alloc.support_size() > 1;
    const auto densities = alloc.densities();

    double base_cost = 0.0;
    bool have_base = false;
    // Densities are sorted, so equal densities are adjacent; evaluate each once.
    double cached_density = std::numeric_limits<double>::quiet_NaN();
    double cost = 0.0;
    double gradient = 0.0;
    for (std::size_t idx = 0; idx < densities.size(); ++idx) {
        const double x = densities[idx];
        if (x <= 0.0) {
            continue;
        }
        if (x != cached_density) {
            cached_density = x;
            cost = population_cost(type, x, params);
            if (needs_stability) {
                gradient = population_cost_gradient(type, x, params);
            }
        }

        if (!have_base) {
            base_cost = cost;
            have_base = true;
        } else if (!costs_equal(cost, base_cost, tol.cost_relative)) {
            report.is_nash = false;
            report.violations.push_back({ViolationKind::cost_mismatch, idx, cost, base_cost});
        }
        if (!cost_not_above(cost, empty, tol.cost_relative)) {
            report.is_nash = false;
            report.violations.push_back({ViolationKind::profitable_deviation, idx, cost, empty});
        }
        if (needs_stability && !(gradient > tol.gradient_absolute)) {
            report.is_stable = false;
            report.violations.push_back(
                {ViolationKind::nonpositive_gradient, idx, gradient, tol.gradient_absolute});
        }
    }
    return report;
}

std::vector<EssRecord> enumerate_uniform_ess(const GameParams& params, Population type,
                                             std::size_t n_max, const EssTolerances& tol) {
    std::vector<EssRecord> records;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto alloc = Allocation::uniform(n);
        if (!check_ess(alloc, type, params, tol).verdict()) {
            continue;
        }
        const double x = alloc.densities().front();
        EssRecord rec;
        rec.population = type;
        rec.support_size = n;
        rec.density = x;
        rec.location_cost = population_cost(type, x, params);
        rec.social = social_cost(alloc, params);
        rec.stability_margin = population_cost_gradient(type, x, params);
        records.push_back(rec);
    }
    return records;
}

SelfishSupportBound max_selfish_support(const GameParams& params) {
    auto gradient = [&](double x) { return selfish_cost_derivative(x, params); };

    const double log_lo = std::log(kSupportScanLow);
    auto grid = [&](int k) {
        if (k == kSupportScanPoints - 1) {
            return 1.0;
        }
        return std::exp(log_lo * (1.0 - static_cast<double>(k) / (kSupportScanPoints - 1)));
    };

    double prev = grid(0);
    if (gradient(prev) >= 0.0) {
        throw DomainError("selfish cost gradient is already nonnegative at x = 1e-6; C is too small to resolve");
    }
    for (int k = 1; k < kSupportScanPoints; ++k) {
        const double x = grid(k);
        if (gradient(x) >= 0.0) {
            const double x_bar = bisect([&](double m) { return gradient(m) >= 0.0; }, prev, x,
                                        kSupportBisection);
            SelfishSupportBound bound;
            bound.x_bar = x_bar;
            bound.max_support = static_cast<std::size_t>(std::floor(1.0 / x_bar));
            return bound;
        }
        prev = x;
    }
    return {};
}

double altruistic_stability_interval(const GameParams& params) {
    if (params.is_fully_infected() || params.is_disease_free()) {
        throw DegenerateError("R'' vanishes identically when eta is 0 or 1");
    }
    auto curvature = [&](double x) { return final_size(x, params).r_double_prime; };

    double prev = 0.0;
    for (int k = 1; k <= kIntervalScanPoints; ++k) {
        const double x = static_cast<double>(k) / kIntervalScanPoints;
        if (!(curvature(x) > 0.0)) {
            return bisect([&](double m) { return !(curvature(m) > 0.0); }, prev, x,
                          kIntervalBisection);
        }
        prev = x;
    }
    return 1.0;
}

AltruisticThreshold altruistic_threshold(const GameParams& params, const EssTolerances& tol) {
    AltruisticThreshold out;
    out.a = altruistic_stability_interval(params);

    // R' increases on (0, a); R'(0) = eta < C + eta.
    const double cap = params.c() + params.eta();
    auto slope = [&](double x) { return final_size(x, params).r_prime; };
    if (slope(out.a) <= cap) {
        out.incentive_density = out.a;
    } else {
        out.incentive_density = bisect([&](double m) { return slope(m) > cap; }, 0.0, out.a,
                                       kIntervalBisection);
    }

    const double limit = std::min(out.a, out.incentive_density);
    std::size_t n = static_cast<std::size_t>(std::floor(1.0 / limit)) + 1;
    // Near the end of the interval R'' may be positive yet below the
    // gradient tolerance; step past those.
    for (std::size_t guard = 0; guard < 1000000; ++guard, ++n) {
        if (check_ess(Allocation::uniform(n), Population::altruistic, params, tol).verdict()) {
            out.n0 = n;
            break;
        }
    }
    return out;
}

}  // namespace pgl
