#include "projineq/hoelder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "projineq/errors.hpp"

namespace projineq {

ConjugatePair::ConjugatePair(double p, double q, double tol) : p_(p), q_(q) {
    if (!std::isfinite(p) || !std::isfinite(q) || !(p > 1.0) || !(q > 1.0)) {
        throw DomainError("ConjugatePair: exponents must be finite and > 1 (p = " + std::to_string(p) +
                          ", q = " + std::to_string(q) + ")");
    }
    if (std::fabs(1.0 / p + 1.0 / q - 1.0) > tol) {
        throw DomainError("ConjugatePair: 1/p + 1/q != 1");
    }
}

ConjugatePair ConjugatePair::from_p(double p) {
    if (!std::isfinite(p) || !(p > 1.0)) {
        throw DomainError("ConjugatePair: p must be finite and > 1 (got " + std::to_string(p) + ")");
    }
    return ConjugatePair(p, p / (p - 1.0));
}

double lp_norm(const RandomVariable &X, double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) {
        throw DomainError("lp_norm: p must be >= 1 (got " + std::to_string(p) + ")");
    }
    const auto w = X.space()->weights();
    const auto x = X.values();
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = std::fabs(x[i]);
        s += w[i] * (p == 1.0 ? a : p == 2.0 ? a * a : std::pow(a, p));
    }
    if (p == 1.0) return s;
    if (p == 2.0) return std::sqrt(s);
    return std::pow(s, 1.0 / p);
}

double young_intermediate_bound(const RandomVariable &X, const RandomVariable &Y, const ConjugatePair &pair) {
    require_same_space(X, Y);
    const double p = pair.p();
    const double q = pair.q();
    const double nx = lp_norm(X, p);
    const double ny = lp_norm(Y, q);
    if (nx == 0.0 || ny == 0.0) return 0.0;
    const auto U = X.abs_pow(p / 2.0);
    const auto V = Y.abs_pow(q / 2.0);
    return (1.0 / (p * p) + 1.0 / (q * q)) * nx * ny +
           (2.0 / (p * q)) * std::pow(nx, 1.0 - p / 2.0) * std::pow(ny, 1.0 - q / 2.0) * l2_inner(U, V);
}

HoelderReport refined_hoelder(const RandomVariable &X, const RandomVariable &Y, const ConjugatePair &pair,
                              double tol) {
    require_same_space(X, Y);
    const double p = pair.p();
    const double q = pair.q();
    HoelderReport r;
    const double nx = lp_norm(X, p);
    const double ny = lp_norm(Y, q);
    if (nx == 0.0 || ny == 0.0) return r;

    const auto U = X.abs_pow(p / 2.0);
    const auto V = Y.abs_pow(q / 2.0);
    // ||U||_2 ||V||_2 = ||X||_p^(p/2) ||Y||_q^(q/2)
    const double uv_norms = std::pow(nx, p / 2.0) * std::pow(ny, q / 2.0);
    const double ratio = (stddev(V) * expectation(U) - stddev(U) * expectation(V)) / uv_norms;
    const double radicand = std::clamp(1.0 - ratio * ratio, 0.0, 1.0);

    r.lhs = l2_inner(X.abs(), Y.abs());
    r.classical = nx * ny;
    r.refined = r.classical * (1.0 / (p * p) + 1.0 / (q * q) + (2.0 / (p * q)) * std::sqrt(radicand));
    r.young_term = young_intermediate_bound(X, Y, pair);
    r.improvement = r.classical - r.refined;
    r.holds = holds_within(r.lhs, r.refined, r.classical, tol) &&
              holds_within(r.refined, r.classical, r.classical, tol);
    return r;
}

NewWalkerP2 new_walker_p2(const RandomVariable &X, const RandomVariable &Y) {
    require_same_space(X, Y);
    const auto ax = X.abs();
    const auto ay = Y.abs();
    const double upper = l2_norm(X) * l2_norm(Y);
    NewWalkerP2 out;
    out.seeh_bound = walker_bound(ax, ay);
    out.bound = 0.5 * upper + 0.5 * out.seeh_bound;
    return out;
}

} // namespace projineq
