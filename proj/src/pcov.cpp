#include "projineq/pcov.hpp"

#include <algorithm>
#include <cmath>

#include "projineq/dfun.hpp"

namespace projineq {

std::string_view to_string(InequalityName name) {
    switch (name) {
    case InequalityName::EnhancedRichard: return "eR";
    case InequalityName::EnhancedBuzano: return "eB";
    case InequalityName::EnhancedD: return "eD";
    case InequalityName::Buzano: return "B";
    case InequalityName::Richard: return "R";
    case InequalityName::DInequality: return "D";
    case InequalityName::CovarianceBound: return "cov";
    }
    return "?";
}

InequalityWitness InequalityWitness::make(InequalityName name, double lhs, double rhs,
                                          double norm_product, double tol) {
    InequalityWitness w;
    w.name = name;
    w.lhs = lhs;
    w.rhs = rhs;
    w.slack = rhs - lhs;
    w.holds = holds_within(lhs, rhs, max_abs(lhs, rhs, norm_product), tol);
    return w;
}

double p_covariance(const Projector &P, const Vector &x, const Vector &y) {
    return inner(complement_project(P, x), complement_project(P, y));
}

double p_covariance_reduced(const Projector &P, const Vector &x, const Vector &y) {
    return inner(x, y) - projected_inner(P, x, y);
}

double p_variance(const Projector &P, const Vector &x) {
    const auto r = complement_project(P, x);
    return inner(r, r);
}

double z_covariance(const Vector &z, const Vector &x, const Vector &y) {
    return p_covariance_reduced(rank_one_projector(z), x, y);
}

InequalityWitness covariance_bound(const Projector &P, const Vector &x, const Vector &y, double tol) {
    const auto vx = decoupling_vector(P, x);
    const auto vy = decoupling_vector(P, y);
    return InequalityWitness::make(InequalityName::CovarianceBound, std::fabs(p_covariance(P, x, y)),
                                   vx.q * vy.q, norm(x) * norm(y), tol);
}

InequalityWitness d_inequality(const Projector &P, const Vector &x, const Vector &y, double tol) {
    return InequalityWitness::make(InequalityName::DInequality, std::fabs(inner(x, y)),
                                   d_function(P, x, y), norm(x) * norm(y), tol);
}

InequalityWitness enhanced_richard(const Projector &P, const Vector &x, const Vector &y, double tol) {
    const double lhs = std::fabs(2.0 * projected_inner(P, x, y) - inner(x, y));
    return InequalityWitness::make(InequalityName::EnhancedRichard, lhs, d_function(P, x, y),
                                   norm(x) * norm(y), tol);
}

InequalityWitness enhanced_buzano(const Projector &P, const Vector &x, const Vector &y, double tol) {
    const double lhs = 2.0 * std::fabs(projected_inner(P, x, y));
    const double rhs = d_function(P, x, y) + std::fabs(inner(x, y));
    return InequalityWitness::make(InequalityName::EnhancedBuzano, lhs, rhs, norm(x) * norm(y), tol);
}

InequalityWitness enhanced_d(const Projector &P, const Vector &x, const Vector &y, double tol) {
    const auto vx = decoupling_vector(P, x);
    const auto vy = decoupling_vector(P, y);
    const double rhs = vx.q * vy.q + std::fabs(projected_inner(P, x, y));
    return InequalityWitness::make(InequalityName::EnhancedD, std::fabs(inner(x, y)), rhs,
                                   norm(x) * norm(y), tol);
}

InequalityWitness classical_buzano(const Vector &z, const Vector &x, const Vector &y, double tol) {
    const auto Pz = rank_one_projector(z);
    const double nxy = norm(x) * norm(y);
    const double xy = std::fabs(inner(x, y));
    const double lhs = 2.0 * std::fabs(projected_inner(Pz, x, y));
    auto w = InequalityWitness::make(InequalityName::Buzano, lhs, nxy + xy, nxy, tol);
    w.enhanced_rhs = d_function(Pz, x, y) + xy;
    return w;
}

InequalityWitness classical_richard(const Vector &z, const Vector &x, const Vector &y, double tol) {
    const auto Pz = rank_one_projector(z);
    const double nxy = norm(x) * norm(y);
    const double lhs = std::fabs(2.0 * projected_inner(Pz, x, y) - inner(x, y));
    auto w = InequalityWitness::make(InequalityName::Richard, lhs, nxy, nxy, tol);
    w.enhanced_rhs = d_function(Pz, x, y);
    return w;
}

} // namespace projineq
