#include "projineq/dfun.hpp"

#include <cmath>

namespace projineq {

BoundChainReport BoundChainReport::make(double lower, double middle, double upper, double tol) {
    BoundChainReport r;
    r.lower = lower;
    r.middle = middle;
    r.upper = upper;
    r.slack_lower = middle - lower;
    r.slack_upper = upper - middle;
    const double scale = std::fabs(upper);
    r.holds = holds_within(lower, middle, scale, tol) && holds_within(middle, upper, scale, tol);
    return r;
}

double d_function(const Projector &P, const Vector &x, const Vector &y) {
    return d_function(decoupling_vector(P, x), decoupling_vector(P, y));
}

double d_identity_residual(const Projector &P, const Vector &x, const Vector &y) {
    const auto vx = decoupling_vector(P, x);
    const auto vy = decoupling_vector(P, y);
    const double dxy = d_function(vx, vy);
    const double det = decoupling_det(vx, vy);
    return (d_function(vx, vx) * d_function(vy, vy) - dxy * dxy) - det * det;
}

BoundChainReport bound_chain(const Projector &P, const Vector &x, const Vector &y, double tol) {
    return BoundChainReport::make(std::fabs(inner(x, y)), d_function(P, x, y), norm(x) * norm(y), tol);
}

CsGap cs_gap_lower_bound(const Projector &P, const Vector &x, const Vector &y) {
    const auto vx = decoupling_vector(P, x);
    const auto vy = decoupling_vector(P, y);
    const double xy = inner(x, y);
    const double det = decoupling_det(vx, vy);
    return {inner(x, x) * inner(y, y) - xy * xy, det * det};
}

} // namespace projineq
