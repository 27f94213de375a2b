#pragma once

#include <string_view>
#include <vector>

#include "projineq/hoelder.hpp"
#include "projineq/prob.hpp"
#include "projineq/space.hpp"

namespace projineq::cli {

enum class CheckKind {
    Inequality,  ///< lhs <= rhs
    Identity,    ///< lhs == rhs
};

/// One evaluated property on one instance, normalized by its natural scale.
struct Check {
    std::string_view name;  ///< points at a string literal
    CheckKind kind = CheckKind::Inequality;
    double lhs = 0.0;
    double rhs = 0.0;
    double scale = 0.0;

    /// Excess beyond the relation, divided by scale (absolute when scale is 0). Never negative.
    double violation() const;
    /// (rhs - lhs) / scale for inequalities, -|rhs - lhs| / scale for identities.
    double relative_slack() const;
    bool holds(double tol) const { return violation() <= tol; }
    /// Both sides agree within tol * scale.
    bool tight(double tol) const;
};

/// Everything checkable on (P, x, y) without extra randomness: Pythagoras, self-adjointness,
/// idempotence, the D-function properties, the enhanced CS chain, the determinant identity,
/// the gap bound, the five witnesses for general P and the P-covariance identities.
std::vector<Check> hilbert_checks(const Projector &P, const Vector &x, const Vector &y);

/// Rank-one checks for direction z: classical B and R, their dominance by eB and eR,
/// and z-covariance against the general P-covariance.
std::vector<Check> direction_checks(const Vector &z, const Vector &x, const Vector &y);

/// Walker chain, its D-function form, symmetries, equalization and the R^m bridge.
std::vector<Check> walker_checks(const RandomVariable &X, const RandomVariable &Y, double tol);

/// Refined Hoelder chain, the Young step and a naive weighted-sum recomputation of every
/// expectation; for p = 2 also the half-improvement ordering.
std::vector<Check> hoelder_checks(const RandomVariable &X, const RandomVariable &Y,
                                  const ConjugatePair &pair);

} // namespace projineq::cli
