#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "projineq/space.hpp"

namespace projineq::cli {

inline constexpr int kBoundsInputVersion = 1;

/// Parsed `bounds` document: {"version": 1, "x": [...], "y": [...], "span": [[...], ...]}
/// or the same with "z": [...] in place of "span". Unknown keys are ignored.
struct BoundsInput {
    Vector x;
    Vector y;
    std::optional<std::vector<Vector>> span;
    std::optional<Vector> z;
};

/// Throws InputError with MalformedInput, DimensionMismatch or InvalidValue.
BoundsInput parse_bounds_input(std::string_view json_text);

/// Reads a whole file; throws InputError(Io) on failure.
std::string read_file(const std::string &path);

/// PROJINEQ_TOLERANCE when set and valid, otherwise `fallback`.
/// Throws InputError(Usage) when the variable is set but not a positive finite number.
double tolerance_from_env(double fallback);

} // namespace projineq::cli
