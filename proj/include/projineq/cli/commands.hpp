#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "projineq/cli/fuzz.hpp"

namespace projineq::cli {

/// Flag value when given, else PROJINEQ_TOLERANCE, else 1e-9.
double resolve_tolerance(std::optional<double> flag);

struct BoundsOptions {
    std::string input;
    std::optional<std::string> json_out;  ///< "-" writes the JSON report to `out` instead of text
    std::optional<double> tolerance;
};

struct WalkerOptions {
    std::string csv;
    std::vector<std::string> columns;
    std::optional<std::string> weights;
    std::optional<std::string> json_out;
    std::optional<double> tolerance;
};

struct HoelderOptions {
    std::string csv;
    std::vector<std::string> columns;
    std::optional<std::string> weights;
    double p = 2.0;
    std::optional<std::string> json_out;
    std::optional<double> tolerance;
};

struct FuzzOptions {
    FuzzConfig config;
    std::optional<double> tolerance;
    unsigned threads = 0;
    std::optional<std::string> json_out;
    std::optional<std::string> dump_dir;  ///< failing instances as replayable files
};

// Each command returns a process exit status (see ExitCode) and never throws.
int cmd_bounds(const BoundsOptions &opts, std::ostream &out, std::ostream &err);
int cmd_walker(const WalkerOptions &opts, std::ostream &out, std::ostream &err);
int cmd_hoelder(const HoelderOptions &opts, std::ostream &out, std::ostream &err);
int cmd_fuzz(const FuzzOptions &opts, std::ostream &out, std::ostream &err);

} // namespace projineq::cli
