#pragma once

#include "projineq/space.hpp"
#include "projineq/tolerance.hpp"

namespace projineq {

/// Evaluated chain lower <= middle <= upper with slacks.
struct BoundChainReport {
    double lower = 0.0;
    double middle = 0.0;
    double upper = 0.0;
    double slack_lower = 0.0;  ///< middle - lower
    double slack_upper = 0.0;  ///< upper - middle
    bool holds = true;         ///< both links hold up to tol * upper

    static BoundChainReport make(double lower, double middle, double upper, double tol = kRelTolerance);
};

/// Gap ||x||^2 ||y||^2 - <x,y>^2 of Cauchy-Schwarz and its determinant lower bound.
struct CsGap {
    double gap = 0.0;
    double bound = 0.0;
};

/// D(x,y|P) = ||Px|| ||Py|| + ||P-perp x|| ||P-perp y||.
double d_function(const Projector &P, const Vector &x, const Vector &y);

/// Same value from two already computed decoupling vectors (the R^2 dot product).
inline double d_function(const DecouplingVector &vx, const DecouplingVector &vy) {
    return vx.p * vy.p + vx.q * vy.q;
}

/// det of the 2x2 matrix with rows v_P(x), v_P(y).
inline double decoupling_det(const DecouplingVector &vx, const DecouplingVector &vy) {
    return vx.p * vy.q - vx.q * vy.p;
}

/// [D(x,x)D(y,y) - D(x,y)^2] - det^2(v_P(x); v_P(y)). Zero up to rounding for every input.
double d_identity_residual(const Projector &P, const Vector &x, const Vector &y);

/// |<x,y>| <= D(x,y|P) <= ||x|| ||y||.
BoundChainReport bound_chain(const Projector &P, const Vector &x, const Vector &y,
                             double tol = kRelTolerance);

CsGap cs_gap_lower_bound(const Projector &P, const Vector &x, const Vector &y);

} // namespace projineq
