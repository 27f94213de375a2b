#include "projineq/cli/checks.hpp"

#include <algorithm>
#include <cmath>

#include "projineq/dfun.hpp"
#include "projineq/pcov.hpp"

namespace projineq::cli {

double Check::violation() const {
    const double excess = kind == CheckKind::Inequality ? std::max(0.0, lhs - rhs) : std::fabs(lhs - rhs);
    return scale > 0.0 ? excess / scale : excess;
}

double Check::relative_slack() const {
    const double s = kind == CheckKind::Inequality ? rhs - lhs : -std::fabs(rhs - lhs);
    return scale > 0.0 ? s / scale : s;
}

bool Check::tight(double tol) const {
    const double d = std::fabs(rhs - lhs);
    return scale > 0.0 ? d <= tol * scale : d <= tol;
}

namespace {

Check le(std::string_view name, double lhs, double rhs, double scale) {
    return {name, CheckKind::Inequality, lhs, rhs, scale};
}

Check eq(std::string_view name, double lhs, double rhs, double scale) {
    return {name, CheckKind::Identity, lhs, rhs, scale};
}

Check from_witness(std::string_view name, const InequalityWitness &w, double norm_product) {
    return le(name, w.lhs, w.rhs, max_abs(w.lhs, w.rhs, norm_product));
}

// D(x,y|P) through the dense matrix form of P, independent of the basis route.
double d_function_by_matrix(const Projector &P, const Vector &x, const Vector &y) {
    const std::size_t n = P.ambient_dim();
    const auto m = P.matrix();
    auto split = [&](const Vector &v) {
        double pp = 0.0;
        double qq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double pv = 0.0;
            for (std::size_t j = 0; j < n; ++j) pv += m[i * n + j] * v[j];
            pp += pv * pv;
            qq += (v[i] - pv) * (v[i] - pv);
        }
        return std::pair{std::sqrt(pp), std::sqrt(qq)};
    };
    const auto [px, qx] = split(x);
    const auto [py, qy] = split(y);
    return px * py + qx * qy;
}

struct NaiveMoments {
    double abs_xy = 0.0;
    double norm_x = 0.0;
    double norm_y = 0.0;
    double mean_u = 0.0;
    double mean_v = 0.0;
    double std_u = 0.0;
    double std_v = 0.0;
    double mean_uv = 0.0;
};

// Every expectation of the refined Hoelder bound, summed straight from the definition.
NaiveMoments naive_moments(const RandomVariable &X, const RandomVariable &Y, double p, double q) {
    const auto w = X.space()->weights();
    const auto x = X.values();
    const auto y = Y.values();
    NaiveMoments m;
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double u = std::pow(std::fabs(x[i]), p / 2.0);
        const double v = std::pow(std::fabs(y[i]), q / 2.0);
        m.abs_xy += w[i] * std::fabs(x[i]) * std::fabs(y[i]);
        sx += w[i] * std::pow(std::fabs(x[i]), p);
        sy += w[i] * std::pow(std::fabs(y[i]), q);
        m.mean_u += w[i] * u;
        m.mean_v += w[i] * v;
        m.mean_uv += w[i] * u * v;
    }
    double vu = 0.0;
    double vv = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double du = std::pow(std::fabs(x[i]), p / 2.0) - m.mean_u;
        const double dv = std::pow(std::fabs(y[i]), q / 2.0) - m.mean_v;
        vu += w[i] * du * du;
        vv += w[i] * dv * dv;
    }
    m.norm_x = std::pow(sx, 1.0 / p);
    m.norm_y = std::pow(sy, 1.0 / q);
    m.std_u = std::sqrt(vu);
    m.std_v = std::sqrt(vv);
    return m;
}

} // namespace

std::vector<Check> hilbert_checks(const Projector &P, const Vector &x, const Vector &y) {
    std::vector<Check> out;
    out.reserve(32);

    const double nx = norm(x);
    const double ny = norm(y);
    const double nxy = nx * ny;
    const double sq = inner(x, x) * inner(y, y);
    const auto px = project(P, x);
    const auto py = project(P, y);
    const auto rx = complement_project(P, x);
    const auto ry = complement_project(P, y);
    const auto vx = decoupling_vector(P, x);
    const auto vy = decoupling_vector(P, y);
    const double d = d_function(P, x, y);
    const double xy = inner(x, y);
    const double pxy = projected_inner(P, x, y);

    // projector structure
    out.push_back(eq("pythagoras", vx.p * vx.p + vx.q * vx.q, inner(x, x), inner(x, x)));
    out.push_back(eq("self_adjoint", inner(px, y), inner(x, py), nxy));
    out.push_back(eq("idempotence", norm(project(P, px) - px), 0.0, nx));
    out.push_back(eq("orthogonality", inner(px, ry), 0.0, nxy));

    // D-function properties
    out.push_back(eq("d.self", d_function(P, x, x), inner(x, x), inner(x, x)));
    out.push_back(eq("d.complement", d_function(P.complement(), x, y), d, nxy));
    out.push_back(eq("d.projected", d_function(P, px, y), vx.p * vy.p, nxy));
    out.push_back(eq("d.projected_perp", d_function(P, rx, y), vx.q * vy.q, nxy));
    out.push_back(eq("d.reflection", d_function(P, px - rx, y), d, nxy));
    out.push_back(le("d.decoupled_zero", d_function(P, px, ry), 0.0, nxy));
    out.push_back(eq("d.oracle", d, d_function_by_matrix(P, x, y), nxy));

    // enhanced CS chain, determinant identity, gap bound
    const auto chain = bound_chain(P, x, y);
    out.push_back(le("cs_chain.lower", chain.lower, chain.middle, nxy));
    out.push_back(le("cs_chain.upper", chain.middle, chain.upper, nxy));
    out.push_back(eq("det_identity", d_identity_residual(P, x, y), 0.0, sq));
    const auto gap = cs_gap_lower_bound(P, x, y);
    out.push_back(le("gap_bound", gap.bound, gap.gap, sq));

    // P-covariances and the enhanced witnesses
    const double cov = p_covariance(P, x, y);
    out.push_back(eq("pcov.dual_form", cov, p_covariance_reduced(P, x, y), nxy));
    out.push_back(eq("pcov.symmetry", cov, p_covariance(P, y, x), nxy));
    out.push_back(eq("pcov.variance", p_variance(P, x), inner(x, x) - vx.p * vx.p, inner(x, x)));
    out.push_back(from_witness("cov", covariance_bound(P, x, y), nxy));
    out.push_back(le("chain.I", std::fabs(xy) - std::fabs(pxy), vx.q * vy.q, nxy));
    out.push_back(le("chain.II", std::fabs(pxy) - std::fabs(xy), vx.q * vy.q, nxy));
    out.push_back(from_witness("D", d_inequality(P, x, y), nxy));
    out.push_back(from_witness("eR", enhanced_richard(P, x, y), nxy));
    out.push_back(from_witness("eB", enhanced_buzano(P, x, y), nxy));
    const auto ed = enhanced_d(P, x, y);
    out.push_back(from_witness("eD", ed, nxy));
    out.push_back(le("eD.tighter", ed.rhs, d, nxy));
    return out;
}

std::vector<Check> direction_checks(const Vector &z, const Vector &x, const Vector &y) {
    std::vector<Check> out;
    const double nxy = norm(x) * norm(y);
    const auto Pz = rank_one_projector(z);
    const auto b = classical_buzano(z, x, y);
    const auto r = classical_richard(z, x, y);
    out.push_back(from_witness("B", b, nxy));
    out.push_back(from_witness("R", r, nxy));
    out.push_back(from_witness("eB.z", enhanced_buzano(Pz, x, y), nxy));
    out.push_back(from_witness("eR.z", enhanced_richard(Pz, x, y), nxy));
    out.push_back(le("B.dominance", *b.enhanced_rhs, b.rhs, nxy));
    out.push_back(le("R.dominance", *r.enhanced_rhs, r.rhs, nxy));
    out.push_back(eq("zcov", z_covariance(z, x, y), p_covariance(Pz, x, y), nxy));
    return out;
}

std::vector<Check> walker_checks(const RandomVariable &X, const RandomVariable &Y, double tol) {
    std::vector<Check> out;
    const double upper = l2_norm(X) * l2_norm(Y);
    const auto chain = walker_chain(X, Y);
    out.push_back(le("walker.lower", chain.lower, chain.middle, upper));
    out.push_back(le("walker.upper", chain.middle, chain.upper, upper));
    out.push_back(le("walker.radicand", -walker_radicand(X, Y), 0.0, upper * upper));

    const double mx = expectation(X);
    const double my = expectation(Y);
    const double sx = stddev(X);
    const double sy = stddev(Y);
    out.push_back(eq("walker.d_form", chain.middle, std::fabs(mx) * std::fabs(my) + sx * sy, upper));
    out.push_back(eq("walker.symmetry", chain.middle, walker_bound(Y, X), upper));
    out.push_back(eq("walker.sign", chain.middle, walker_bound(X.scaled(-1.0), Y), upper));

    const auto eqz = sharpe_equalization_gap(X, Y, tol);
    if (eqz.equalized) out.push_back(le("walker.equalized", chain.upper - chain.middle, 0.0, upper));
    const auto srx = sharpe_ratio(X);
    const auto sry = sharpe_ratio(Y);
    if (srx.defined() && sry.defined()) {
        // |E X| s_Y - |E Y| s_X = (|SR_X| - |SR_Y|) s_X s_Y
        out.push_back(eq("sharpe.gap_form", (std::fabs(*srx.value) - std::fabs(*sry.value)) * sx * sy, eqz.gap,
                         upper));
    }

    const auto ex = X.embed();
    const auto ey = Y.embed();
    const auto one = DiscreteRandomVariable::constant(X.space(), 1.0).embed();
    out.push_back(eq("bridge.inner", l2_inner(X, Y), inner(ex, ey), upper));
    out.push_back(eq("bridge.expectation", mx, inner(ex, one), l2_norm(X)));
    out.push_back(
        eq("bridge.covariance", covariance(X, Y), p_covariance(rank_one_projector(one), ex, ey), upper));
    return out;
}

std::vector<Check> hoelder_checks(const RandomVariable &X, const RandomVariable &Y, const ConjugatePair &pair) {
    std::vector<Check> out;
    const double p = pair.p();
    const double q = pair.q();
    const auto rep = refined_hoelder(X, Y, pair);
    const double c = rep.classical;
    out.push_back(le("hoelder.lower", rep.lhs, rep.refined, c));
    out.push_back(le("hoelder.upper", rep.refined, c, c));
    out.push_back(le("hoelder.young", rep.lhs, rep.young_term, c));
    out.push_back(le("hoelder.young_refined", rep.young_term, rep.refined, c));

    const auto U = X.abs_pow(p / 2.0);
    const auto V = Y.abs_pow(q / 2.0);
    const double uv = l2_norm(U) * l2_norm(V);
    const double deflation = stddev(V) * expectation(U) - stddev(U) * expectation(V);
    out.push_back(le("hoelder.radicand", std::fabs(deflation), uv, uv));

    const auto m = naive_moments(X, Y, p, q);
    out.push_back(eq("oracle.abs_xy", rep.lhs, m.abs_xy, c));
    out.push_back(eq("oracle.norm_x", lp_norm(X, p), m.norm_x, m.norm_x));
    out.push_back(eq("oracle.norm_y", lp_norm(Y, q), m.norm_y, m.norm_y));
    out.push_back(eq("oracle.mean_u", expectation(U), m.mean_u, l2_norm(U)));
    out.push_back(eq("oracle.mean_v", expectation(V), m.mean_v, l2_norm(V)));
    out.push_back(eq("oracle.std_u", stddev(U), m.std_u, l2_norm(U)));
    out.push_back(eq("oracle.std_v", stddev(V), m.std_v, l2_norm(V)));
    out.push_back(eq("oracle.mean_uv", l2_inner(U, V), m.mean_uv, uv));
    if (m.norm_x > 0.0 && m.norm_y > 0.0) {
        const double ratio = (m.std_v * m.mean_u - m.std_u * m.mean_v) /
                             (std::pow(m.norm_x, p / 2.0) * std::pow(m.norm_y, q / 2.0));
        const double refined = m.norm_x * m.norm_y *
                               (1.0 / (p * p) + 1.0 / (q * q) +
                                (2.0 / (p * q)) * std::sqrt(std::max(0.0, 1.0 - ratio * ratio)));
        out.push_back(eq("oracle.refined", rep.refined, refined, c));
    }

    if (p == 2.0) {
        const auto nw = new_walker_p2(X, Y);
        out.push_back(le("new_walker.seeh_lower", rep.lhs, nw.seeh_bound, c));
        out.push_back(le("new_walker.half", nw.seeh_bound, nw.bound, c));
        out.push_back(le("new_walker.upper", nw.bound, c, c));
        out.push_back(eq("new_walker.consistency", rep.refined, nw.bound, c));
    }
    return out;
}

} // namespace projineq::cli
