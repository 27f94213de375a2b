#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace projineq::cli {

struct FuzzConfig {
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;  ///< instances per family
    std::size_t max_dim = 16;
    std::size_t max_outcomes = 64;
    double range_min = -10.0;
    double range_max = 10.0;
    double tolerance = 1e-9;
    std::size_t max_failures = 16;  ///< failing instances kept in the report
};

/// Throws InputError(InvalidValue) for out-of-domain settings.
void validate(const FuzzConfig &config);

struct PropertyStats {
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::uint64_t equality_cases = 0;  ///< both sides within tolerance
    double worst_violation = 0.0;      ///< largest relative excess
    double worst_slack = 0.0;          ///< smallest relative slack; meaningful when checks > 0

    void record(double violation, double slack, bool violated, bool tight);
    void merge(const PropertyStats &other);
};

struct FailureDump {
    std::uint64_t trial = 0;
    std::string family;
    std::string property;
    double lhs = 0.0;
    double rhs = 0.0;
    double scale = 0.0;
    double violation = 0.0;
    bool replayable = false;  ///< instance can be fed to `bounds`/`walker`/`hoelder` as is
    nlohmann::ordered_json instance;
};

struct FuzzReport {
    FuzzConfig config;
    /// Keyed by (family, property name); iteration order is the report order.
    std::map<std::pair<std::string, std::string>, PropertyStats> properties;
    std::map<std::string, std::uint64_t> instances;
    std::uint64_t collinear_instances = 0;  ///< y = alpha x instances
    std::uint64_t collinear_det_zero = 0;   ///< ... whose determinant term vanished within tolerance
    std::vector<FailureDump> failures;      ///< first failures in trial order, capped
    std::uint64_t total_violations = 0;

    bool passed() const { return total_violations == 0; }
    double worst_violation() const;
    void merge(FuzzReport &&other);
};

/// Runs `config.trials` instances of each family (hilbert, walker, hoelder). Trial t of a
/// family draws from a generator seeded by (seed, family, t), so the report does not
/// depend on `threads` (0 picks the hardware concurrency).
FuzzReport run_fuzz(const FuzzConfig &config, unsigned threads = 0);

/// Machine-readable report with a fixed field order and a version tag.
nlohmann::ordered_json to_json(const FuzzReport &report);

} // namespace projineq::cli
