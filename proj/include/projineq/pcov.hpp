#pragma once

#include <optional>
#include <string_view>

#include "projineq/space.hpp"
#include "projineq/tolerance.hpp"

namespace projineq {

enum class InequalityName {
    EnhancedRichard,   ///< eR: |2<Px,y> - <x,y>| <= D(x,y|P)
    EnhancedBuzano,    ///< eB: 2|<Px,y>| <= D(x,y|P) + |<x,y>|
    EnhancedD,         ///< eD: |<x,y>| <= q(x)q(y) + |<Px,y>|
    Buzano,            ///< B:  2|<x,z><y,z>| <= ||x|| ||y|| + |<x,y>|
    Richard,           ///< R:  |2<x,z><y,z> - <x,y>| <= ||x|| ||y||
    DInequality,       ///< D:  |<x,y>| <= D(x,y|P)
    CovarianceBound,   ///< |cov_P(x,y)| <= q(x)q(y)
};

/// Short identifier: "eR", "eB", "eD", "B", "R", "D", "cov".
std::string_view to_string(InequalityName name);

/// One evaluated inequality lhs <= rhs.
struct InequalityWitness {
    InequalityName name{};
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  ///< rhs - lhs
    bool holds = true;   ///< lhs <= rhs + tol * max(|lhs|, |rhs|, ||x|| ||y||)
    /// For the classical B and R forms: rhs of the enhanced counterpart for the same instance.
    std::optional<double> enhanced_rhs;

    static InequalityWitness make(InequalityName name, double lhs, double rhs, double norm_product,
                                  double tol = kRelTolerance);
};

/// <x - Px, y - Py>.
double p_covariance(const Projector &P, const Vector &x, const Vector &y);
/// <x,y> - <Px,y>; equal to p_covariance up to rounding.
double p_covariance_reduced(const Projector &P, const Vector &x, const Vector &y);
/// ||x||^2 - ||Px||^2, evaluated as ||P-perp x||^2 so it is never negative.
double p_variance(const Projector &P, const Vector &x);
/// <x,y> - <x,z^><y,z^> with z^ = z/||z||. Throws ZeroDirectionError for z = 0.
double z_covariance(const Vector &z, const Vector &x, const Vector &y);

InequalityWitness covariance_bound(const Projector &P, const Vector &x, const Vector &y,
                                   double tol = kRelTolerance);
InequalityWitness d_inequality(const Projector &P, const Vector &x, const Vector &y,
                               double tol = kRelTolerance);
InequalityWitness enhanced_richard(const Projector &P, const Vector &x, const Vector &y,
                                   double tol = kRelTolerance);
InequalityWitness enhanced_buzano(const Projector &P, const Vector &x, const Vector &y,
                                  double tol = kRelTolerance);
InequalityWitness enhanced_d(const Projector &P, const Vector &x, const Vector &y,
                             double tol = kRelTolerance);

/// Classical Buzano for unit direction z^; enhanced_rhs carries D(x,y|P_z) + |<x,y>|.
InequalityWitness classical_buzano(const Vector &z, const Vector &x, const Vector &y,
                                   double tol = kRelTolerance);
/// Classical Richard for unit direction z^; enhanced_rhs carries D(x,y|P_z).
InequalityWitness classical_richard(const Vector &z, const Vector &x, const Vector &y,
                                    double tol = kRelTolerance);

} // namespace projineq
