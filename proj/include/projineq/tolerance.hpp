#pragma once

#include <algorithm>
#include <cmath>

namespace projineq {

/// Pairwise orthonormality tolerance for projector bases.
inline constexpr double kOrthTolerance = 1e-10;
/// Relative tolerance used for inequality slack and identity residuals.
inline constexpr double kRelTolerance = 1e-9;
/// Standard deviations at or below this value make a Sharpe ratio undefined.
inline constexpr double kSigmaFloor = 1e-12;
/// Allowed drift of 1/p + 1/q from one.
inline constexpr double kConjugateTolerance = 1e-12;

/// True when lhs <= rhs up to tol * scale.
inline bool holds_within(double lhs, double rhs, double scale, double tol) {
    return lhs <= rhs + tol * scale;
}

/// Largest absolute value among the arguments; used as the natural scale of a check.
template <typename... Ts>
double max_abs(double first, Ts... rest) {
    double m = std::fabs(first);
    ((m = std::max(m, std::fabs(static_cast<double>(rest)))), ...);
    return m;
}

} // namespace projineq
