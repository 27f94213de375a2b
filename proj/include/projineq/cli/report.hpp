#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "projineq/cli/checks.hpp"
#include "projineq/cli/csv.hpp"
#include "projineq/cli/inputs.hpp"

namespace projineq::cli {

using Report = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

/// Serializes checks as {name, kind, lhs, rhs, scale, violation, holds}.
Report checks_to_json(const std::vector<Check> &checks, double tol);

/// D-function, chain, determinant identity, gap bound, P-covariance and all witnesses
/// for one bounds document. B and R appear when the projector is rank one.
Report bounds_report(const BoundsInput &input, double tol);

/// Sample-data ingestion: equal weights unless `weight_column` names a column of probabilities.
struct SampleSpec {
    std::vector<std::string> columns;
    std::optional<std::string> weight_column;
};

/// Per-column moments and Sharpe ratios, per-pair (i < j over `columns`) Walker analysis.
Report walker_report(const CsvTable &table, const SampleSpec &spec, double tol);

/// Refined Hoelder report for exactly two columns and exponent p > 1.
Report hoelder_report(const CsvTable &table, const SampleSpec &spec, double p, double tol);

/// Human-readable renderings of the reports above.
void print_bounds(std::ostream &out, const Report &r);
void print_walker(std::ostream &out, const Report &r);
void print_hoelder(std::ostream &out, const Report &r);

} // namespace projineq::cli
