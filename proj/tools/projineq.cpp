// projineq: D-function / P-covariance bound reports and the randomized verification harness.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "projineq/cli/commands.hpp"
#include "projineq/cli/error.hpp"

namespace {

template <typename T>
void optional_option(CLI::App *app, const std::string &name, std::optional<T> &target, const std::string &help) {
    app->add_option_function<T>(name, [&target](const T &v) { target = v; }, help);
}

} // namespace

int main(int argc, char **argv) {
    using namespace projineq::cli;

    CLI::App app{"Projection-based refinements of Cauchy-Schwarz, Buzano, Richard, Walker and Hoelder"};
    app.require_subcommand(1);

    BoundsOptions bounds;
    auto *bounds_cmd = app.add_subcommand("bounds", "D-function chain and P-covariance witnesses for x, y and P");
    bounds_cmd->add_option("--input", bounds.input, "JSON document with x, y and span or z")->required();
    optional_option(bounds_cmd, "--json", bounds.json_out, "write the machine-readable report here ('-' = stdout)");
    optional_option(bounds_cmd, "--tolerance", bounds.tolerance, "relative tolerance (default 1e-9)");

    WalkerOptions walker;
    auto *walker_cmd = app.add_subcommand("walker", "Walker bound, Sharpe ratios and equalization for CSV columns");
    walker_cmd->add_option("--csv", walker.csv, "CSV file with a header row")->required();
    walker_cmd->add_option("--cols", walker.columns, "comma separated column names")->required()->delimiter(',');
    optional_option(walker_cmd, "--weights", walker.weights, "column of outcome probabilities (default uniform)");
    optional_option(walker_cmd, "--json", walker.json_out, "write the machine-readable report here ('-' = stdout)");
    optional_option(walker_cmd, "--tolerance", walker.tolerance, "relative tolerance (default 1e-9)");

    HoelderOptions hoelder;
    auto *hoelder_cmd = app.add_subcommand("hoelder", "refined Hoelder bound for two CSV columns");
    hoelder_cmd->add_option("--csv", hoelder.csv, "CSV file with a header row")->required();
    hoelder_cmd->add_option("--cols", hoelder.columns, "two comma separated column names")
        ->required()
        ->delimiter(',');
    hoelder_cmd->add_option("--p", hoelder.p, "exponent p > 1; q = p/(p-1)")->required();
    optional_option(hoelder_cmd, "--weights", hoelder.weights, "column of outcome probabilities (default uniform)");
    optional_option(hoelder_cmd, "--json", hoelder.json_out, "write the machine-readable report here ('-' = stdout)");
    optional_option(hoelder_cmd, "--tolerance", hoelder.tolerance, "relative tolerance (default 1e-9)");

    FuzzOptions fuzz;
    auto *fuzz_cmd = app.add_subcommand("fuzz", "seeded randomized verification of every property");
    fuzz_cmd->add_option("--seed", fuzz.config.seed, "generator seed")->capture_default_str();
    fuzz_cmd->add_option("--trials", fuzz.config.trials, "instances per family")->capture_default_str();
    fuzz_cmd->add_option("--max-dim", fuzz.config.max_dim, "largest vector dimension")->capture_default_str();
    fuzz_cmd->add_option("--max-outcomes", fuzz.config.max_outcomes, "largest outcome space")->capture_default_str();
    fuzz_cmd->add_option("--range-min", fuzz.config.range_min, "smallest sampled value")->capture_default_str();
    fuzz_cmd->add_option("--range-max", fuzz.config.range_max, "largest sampled value")->capture_default_str();
    fuzz_cmd->add_option("--max-failures", fuzz.config.max_failures, "failing instances kept")->capture_default_str();
    fuzz_cmd->add_option("--threads", fuzz.threads, "worker threads (0 = all cores)")->capture_default_str();
    optional_option(fuzz_cmd, "--tolerance", fuzz.tolerance, "relative tolerance (default 1e-9)");
    optional_option(fuzz_cmd, "--json", fuzz.json_out, "write the machine-readable report here ('-' = stdout)");
    optional_option(fuzz_cmd, "--dump-dir", fuzz.dump_dir, "write failing instances as replayable files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : to_int(ExitCode::Usage);
    }

    if (*bounds_cmd) return cmd_bounds(bounds, std::cout, std::cerr);
    if (*walker_cmd) return cmd_walker(walker, std::cout, std::cerr);
    if (*hoelder_cmd) return cmd_hoelder(hoelder, std::cout, std::cerr);
    return cmd_fuzz(fuzz, std::cout, std::cerr);
}
