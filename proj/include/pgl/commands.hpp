#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pgl/equilibrium.hpp"
#include "pgl/output.hpp"
#include "pgl/params.hpp"

namespace pgl::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int bad_input = 2;
inline constexpr int solver_failure = 3;
inline constexpr int certificate_failure = 4;
inline constexpr int io_failure = 5;
}  // namespace exit_code

enum class OutputFormat { json, csv };

struct RunConfig {
    std::string command;  // solve | ess | poa | curve | verify
    std::optional<double> r0;
    std::optional<double> eta;
    std::optional<double> c;
    std::optional<double> x;
    Population type = Population::selfish;
    std::size_t n_max = kDefaultNMax;
    std::vector<std::size_t> k_list;
    std::optional<int> grid;
    OutputFormat format = OutputFormat::json;
    std::optional<std::string> out;
    unsigned threads = 1;
};

/// A built document plus whether every certificate it carries passed.
struct CommandOutput {
    output::Document doc;
    bool certificates_ok = true;
    std::vector<std::string> failures;  // human-readable, for the error stream
};

/// Parameter sets plotted by `curve` when none are given: R0 = 2 with
/// eta in {0.01, 0.3} crossed with C in {0.02, 0.1}.
std::vector<GameParams> default_curve_sets();

inline constexpr int kDefaultCurvePoints = 500;

CommandOutput build_solve(const RunConfig& config);
CommandOutput build_ess(const RunConfig& config);
CommandOutput build_poa(const RunConfig& config);
CommandOutput build_curve(const RunConfig& config);
CommandOutput build_verify(const RunConfig& config);

/// Runs one subcommand: builds the document, writes it to `config.out` or
/// to `out`, and maps failures onto the exit-code contract. Diagnostics go
/// to `err`.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace pgl::cli
