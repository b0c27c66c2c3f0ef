// pgl: command-line front end for the pandemic location game library.

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "pgl/commands.hpp"
#include "pgl/errors.hpp"
#include "pgl/verify.hpp"

int main(int argc, char** argv) {
    using namespace pgl::cli;

    CLI::App app{"Pandemic location game: final sizes, equilibria and price of anarchy"};
    app.require_subcommand(1, 1);

    RunConfig config;
    std::string type = "selfish";
    std::string format = "json";
    std::string out;
    double r0 = 0.0, eta = 0.0, c = 0.0, x = 0.0;
    int grid = 0;

    const std::pair<const char*, const char*> commands[] = {
        {"solve", "final size, attack probability and derivatives at one density"},
        {"ess", "enumerate uniform evolutionarily stable states"},
        {"poa", "price-of-anarchy bounds (selfish) or ratios for chosen K (altruistic)"},
        {"curve", "per-location cost curves with equilibrium markers"},
        {"verify", "run the certificate checks over a parameter grid"},
    };
    for (const auto& [name, about] : commands) {
        auto* sub = app.add_subcommand(name, about);
        sub->add_option("--r0", r0, "basic reproduction number");
        sub->add_option("--eta", eta, "initial infected fraction");
        sub->add_option("--c", c, "isolation cost coefficient");
        sub->add_option("--x", x, "location density (solve)");
        sub->add_option("--type", type, "population type")->check(CLI::IsMember({"selfish", "altruistic"}));
        sub->add_option("--n-max", config.n_max, "largest support size to enumerate")->check(CLI::PositiveNumber);
        sub->add_option("--k", config.k_list, "comma-separated support sizes (poa altruistic)")->delimiter(',');
        sub->add_option("--grid", grid, "grid resolution (curve points / verify samples)");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out, "output path (stdout when omitted)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code::bad_input;
    }

    const auto* sub = app.get_subcommands().front();
    config.command = sub->get_name();
    if (sub->count("--r0")) config.r0 = r0;
    if (sub->count("--eta")) config.eta = eta;
    if (sub->count("--c")) config.c = c;
    if (sub->count("--x")) config.x = x;
    if (sub->count("--grid")) config.grid = grid;
    if (sub->count("--out")) config.out = out;
    config.type = pgl::parse_population(type);
    config.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
    config.threads = pgl::sweep_threads_from_env();

    return run_command(config, std::cout, std::cerr);
}
