#include "pgl/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "pgl/analysis.hpp"
#include "pgl/epidemic.hpp"
#include "pgl/errors.hpp"
#include "pgl/game.hpp"
#include "pgl/verify.hpp"

namespace pgl::cli {

namespace {

using output::Cell;
using output::Document;
using output::Table;

constexpr const char* kFormatVersion = "1";

Cell count(std::size_t n) {
    return static_cast<std::int64_t>(n);
}

GameParams require_params(const RunConfig& config) {
    if (!config.r0 || !config.eta || !config.c) {
        throw DomainError("--r0, --eta and --c are required for '" + config.command + "'");
    }
    return GameParams::make(*config.r0, *config.eta, *config.c);
}

Document base_document(const RunConfig& config) {
    Document doc;
    doc.meta.emplace_back("command", config.command);
    doc.meta.emplace_back("format_version", std::string(kFormatVersion));
    return doc;
}

void add_param_meta(Document& doc, const GameParams& params) {
    doc.meta.emplace_back("r0", params.r0());
    doc.meta.emplace_back("eta", params.eta());
    doc.meta.emplace_back("c", params.c());
}

Table ess_table(const std::vector<EssRecord>& records) {
    Table table{"rows", {"n", "density", "location_cost", "social_cost", "stability_margin"}, {}};
    for (const auto& rec : records) {
        table.rows.push_back({count(rec.support_size), rec.density, rec.location_cost, rec.social,
                              rec.stability_margin});
    }
    return table;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    file << text;
    file.flush();
    if (!file) {
        throw IoError("failed writing '" + path + "'");
    }
}

void emit(const RunConfig& config, const Document& doc, std::ostream& out) {
    if (config.format == OutputFormat::json) {
        const std::string text = output::to_json(doc);
        if (config.out) {
            write_file(*config.out, text);
        } else {
            out << text;
        }
        return;
    }
    if (doc.tables.empty()) {
        return;
    }
    // CSV: first table at the output path, the others beside it with the
    // table name as suffix.
    if (doc.tables.size() > 1 && !config.out) {
        throw DomainError("--out is required for CSV output of '" + config.command + "'");
    }
    for (std::size_t i = 0; i < doc.tables.size(); ++i) {
        const std::string text = output::to_csv(doc, doc.tables[i]);
        if (!config.out) {
            out << text;
        } else {
            write_file(i == 0 ? *config.out : *config.out + "." + doc.tables[i].name, text);
        }
    }
}

}  // namespace

std::vector<GameParams> default_curve_sets() {
    std::vector<GameParams> sets;
    for (double eta : {0.01, 0.3}) {
        for (double c : {0.02, 0.1}) {
            sets.push_back(GameParams::make(2.0, eta, c));
        }
    }
    return sets;
}

CommandOutput build_solve(const RunConfig& config) {
    const auto params = require_params(config);
    if (!config.x) {
        throw DomainError("--x is required for 'solve'");
    }
    if (!(*config.x > 0.0 && *config.x <= 1.0)) {
        throw DomainError("--x must lie in (0, 1]");
    }
    const auto sol = final_size(*config.x, params);

    CommandOutput result{base_document(config), true, {}};
    add_param_meta(result.doc, params);
    result.doc.meta.emplace_back("x", *config.x);
    result.doc.tables.push_back(
        {"rows",
         {"x", "r_inf", "p", "r_prime", "r_double_prime", "residual"},
         {{sol.x, sol.r_inf, sol.p, sol.r_prime, sol.r_double_prime, sol.residual}}});
    return result;
}

CommandOutput build_ess(const RunConfig& config) {
    const auto params = require_params(config);
    CommandOutput result{base_document(config), true, {}};
    auto& doc = result.doc;
    add_param_meta(doc, params);
    doc.meta.emplace_back("type", std::string(to_string(config.type)));
    doc.meta.emplace_back("n_max", count(config.n_max));

    const auto records = enumerate_uniform_ess(params, config.type, config.n_max);
    doc.summary.emplace_back("ess_count", count(records.size()));
    if (config.type == Population::selfish) {
        const auto bound = max_selfish_support(params);
        doc.summary.emplace_back("max_support", count(bound.max_support));
        doc.summary.emplace_back("x_bar", bound.x_bar ? Cell(*bound.x_bar) : Cell());
    } else {
        try {
            const auto threshold = altruistic_threshold(params);
            doc.summary.emplace_back("stability_interval", threshold.a);
            doc.summary.emplace_back("incentive_density", threshold.incentive_density);
            doc.summary.emplace_back("tail_start_n", count(threshold.n0));
        } catch (const DegenerateError&) {
            doc.summary.emplace_back("stability_interval", Cell());
            doc.summary.emplace_back("incentive_density", Cell());
            doc.summary.emplace_back("tail_start_n", Cell());
        }
    }
    doc.tables.push_back(ess_table(records));
    return result;
}

CommandOutput build_poa(const RunConfig& config) {
    const auto params = require_params(config);
    CommandOutput result{base_document(config), true, {}};
    auto& doc = result.doc;
    add_param_meta(doc, params);
    doc.meta.emplace_back("type", std::string(to_string(config.type)));
    doc.meta.emplace_back("n_max", count(config.n_max));

    if (config.type == Population::selfish) {
        const auto report = selfish_poa(params, config.n_max);
        doc.summary = {
            {"worst_ess_cost", report.worst_ess_cost},
            {"worst_ess_n", count(report.worst_ess_n)},
            {"ess_count", count(report.ess_count)},
            {"opt_lower", report.opt_lower},
            {"opt_upper", report.opt_upper},
            {"opt_argmin_n", count(report.opt_argmin_n)},
            {"poa_lower", report.poa_lower},
            {"poa_upper_estimate", report.poa_upper_estimate},
            {"theorem_bound", report.theorem_bound},
            {"ess_cost_bound", report.ess_cost_bound},
            {"bound_satisfied", report.bound_satisfied},
            {"ess_cost_bound_satisfied", report.ess_cost_bound_satisfied},
        };
        doc.tables.push_back(ess_table(enumerate_uniform_ess(params, Population::selfish, config.n_max)));
        if (!report.bound_satisfied) {
            result.certificates_ok = false;
            result.failures.push_back("selfish PoA estimate exceeds 3/C + R0 at " + params.describe());
        }
        if (!report.ess_cost_bound_satisfied) {
            result.certificates_ok = false;
            result.failures.push_back("worst selfish ESS cost exceeds max{2, C R0 + 1} at " + params.describe());
        }
        return result;
    }

    if (config.k_list.empty()) {
        throw DomainError("--k is required for 'poa --type altruistic'");
    }
    std::ostringstream ks;
    for (std::size_t i = 0; i < config.k_list.size(); ++i) {
        ks << (i ? "," : "") << config.k_list[i];
    }
    doc.meta.emplace_back("k", ks.str());

    const auto ratios = altruistic_poa_growth(params, config.k_list, config.n_max);
    Table table{"rows", {"k", "is_ess", "social_cost", "opt_upper", "ratio", "floor", "error"}, {}};
    for (const auto& entry : ratios) {
        if (entry.is_ess) {
            table.rows.push_back({count(entry.k), true, entry.social, entry.opt_upper, entry.ratio,
                                  entry.floor, Cell()});
            if (!(entry.ratio >= entry.floor)) {
                result.certificates_ok = false;
                result.failures.push_back("altruistic ratio below K C / (C + 1) for K=" +
                                          std::to_string(entry.k));
            }
        } else {
            table.rows.push_back({count(entry.k), false, Cell(), entry.opt_upper, Cell(), entry.floor,
                                  entry.error.value_or("")});
        }
    }
    if (!ratios.empty()) {
        doc.summary.emplace_back("opt_upper", ratios.front().opt_upper);
    }
    doc.tables.push_back(std::move(table));
    return result;
}

CommandOutput build_curve(const RunConfig& config) {
    std::vector<GameParams> sets;
    const bool user_params = config.r0 || config.eta || config.c;
    if (user_params) {
        sets.push_back(require_params(config));
    } else {
        sets = default_curve_sets();
    }
    const int points = config.grid.value_or(kDefaultCurvePoints);
    if (points < 2) {
        throw DomainError("--grid must be at least 2 for 'curve'");
    }

    CommandOutput result{base_document(config), true, {}};
    auto& doc = result.doc;
    doc.meta.emplace_back("parameter_source",
                          std::string(user_params ? "command line" : "implementation default quartet"));
    doc.meta.emplace_back("grid_points", static_cast<std::int64_t>(points));
    doc.meta.emplace_back("x_min", 1e-3);
    doc.meta.emplace_back("x_max", 1.0);
    doc.meta.emplace_back("n_max", count(config.n_max));
    doc.summary.emplace_back("series_count", count(sets.size()));

    Table series{"rows",
                 {"series", "r0", "eta", "c", "x", "selfish_total", "isolation", "infection",
                  "altruistic_marginal"},
                 {}};
    Table markers{"markers",
                  {"series", "r0", "eta", "c", "type", "n", "density", "selfish_total",
                   "altruistic_marginal"},
                  {}};

    const double log_lo = std::log(1e-3);
    for (std::size_t s = 0; s < sets.size(); ++s) {
        const auto& params = sets[s];
        const auto id = count(s);
        for (int k = 0; k < points; ++k) {
            const double x = (k == points - 1) ? 1.0 : std::exp(log_lo * (1.0 - static_cast<double>(k) / (points - 1)));
            const auto cost = selfish_cost(x, params);
            series.rows.push_back({id, params.r0(), params.eta(), params.c(), x, cost.total,
                                   cost.isolation, cost.infection, altruistic_cost(x, true, params)});
        }
        for (Population type : {Population::selfish, Population::altruistic}) {
            for (const auto& rec : enumerate_uniform_ess(params, type, config.n_max)) {
                const auto cost = selfish_cost(rec.density, params);
                markers.rows.push_back({id, params.r0(), params.eta(), params.c(),
                                        std::string(to_string(type)), count(rec.support_size),
                                        rec.density, cost.total,
                                        altruistic_cost(rec.density, true, params)});
            }
        }
    }
    doc.tables.push_back(std::move(series));
    doc.tables.push_back(std::move(markers));
    return result;
}

CommandOutput build_verify(const RunConfig& config) {
    VerifyGrid grid;
    if (config.r0 || config.eta || config.c) {
        const auto params = require_params(config);
        grid.r0 = {params.r0()};
        grid.eta = {params.eta()};
        grid.c = {params.c()};
    }
    if (config.grid) {
        if (*config.grid < 2) {
            throw DomainError("--grid must be at least 2 for 'verify'");
        }
        grid.samples = *config.grid;
    }
    grid.n_max = config.n_max;
    grid.threads = config.threads;

    const auto results = run_verification(grid);

    CommandOutput result{base_document(config), true, {}};
    auto& doc = result.doc;
    doc.meta.emplace_back("grid_samples", static_cast<std::int64_t>(grid.samples));
    doc.meta.emplace_back("n_max", count(grid.n_max));
    doc.meta.emplace_back("tuples", count(grid.r0.size() * grid.eta.size() * grid.c.size()));

    Table table{"rows", {"r0", "eta", "c", "check", "passed", "value", "limit", "detail"}, {}};
    std::size_t passed = 0;
    for (const auto& r : results) {
        table.rows.push_back({r.r0, r.eta, r.c, r.check, r.passed, r.value, r.limit, r.detail});
        if (r.passed) {
            ++passed;
        } else {
            result.certificates_ok = false;
            std::ostringstream os;
            os << "check " << r.check << " failed at (r0=" << r.r0 << ", eta=" << r.eta << ", c=" << r.c
               << "): value " << r.value << " vs " << r.limit;
            if (!r.detail.empty()) {
                os << " [" << r.detail << "]";
            }
            result.failures.push_back(os.str());
        }
    }
    doc.summary.emplace_back("checks", count(results.size()));
    doc.summary.emplace_back("passed", count(passed));
    doc.summary.emplace_back("failed", count(results.size() - passed));
    doc.tables.push_back(std::move(table));
    return result;
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        CommandOutput result;
        if (config.command == "solve") {
            result = build_solve(config);
        } else if (config.command == "ess") {
            result = build_ess(config);
        } else if (config.command == "poa") {
            result = build_poa(config);
        } else if (config.command == "curve") {
            result = build_curve(config);
        } else if (config.command == "verify") {
            result = build_verify(config);
        } else {
            err << "pgl: unknown command '" << config.command << "'\n";
            return exit_code::bad_input;
        }
        emit(config, result.doc, out);
        for (const auto& failure : result.failures) {
            err << "pgl: " << failure << "\n";
        }
        return result.certificates_ok ? exit_code::ok : exit_code::certificate_failure;
    } catch (const IoError& e) {
        err << "pgl: " << e.what() << "\n";
        return exit_code::io_failure;
    } catch (const DomainError& e) {
        err << "pgl: " << e.what() << "\n";
        return exit_code::bad_input;
    } catch (const SolverError& e) {
        err << "pgl: solver failure: " << e.what() << " (bracket [" << e.bracket_lo() << ", "
            << e.bracket_hi() << "])\n";
        return exit_code::solver_failure;
    } catch (const Error& e) {
        err << "pgl: solver failure: " << e.what() << "\n";
        return exit_code::solver_failure;
    }
}

}  // namespace pgl::cli
