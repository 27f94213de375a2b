#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "projineq/dfun.hpp"

using namespace projineq;

namespace {

Projector e1_projector() {
    const std::vector<Vector> s{{1, 0}};
    return projector_from_spanning_set(s);
}

Projector random_projector(oracle::Rng &rng, std::size_t n, std::vector<oracle::Vec> *raw = nullptr) {
    const std::size_t k = rng.index(0, n);
    std::vector<Vector> s;
    for (std::size_t i = 0; i < k; ++i) {
        auto v = rng.vec(n);
        if (raw) raw->push_back(v);
        s.emplace_back(std::move(v));
    }
    return projector_from_spanning_set(n, s);
}

} // namespace

TEST_CASE("d_function hand values") {
    const auto P = e1_projector();
    CHECK(d_function(P, {3, 4}, {1, 2}) == 11.0);
    CHECK(d_function(P, {3, 4}, {3, 4}) == doctest::Approx(25.0).epsilon(1e-15));
    CHECK(d_function(P, {2, 0}, {0, 7}) == 0.0);
}

TEST_CASE("d_identity_residual hand values") {
    const auto P = e1_projector();
    // 25*5 - 121 - (3*2 - 4*1)^2 = 0
    CHECK(d_identity_residual(P, {3, 4}, {1, 2}) == 0.0);
    const Vector x{3, 4};
    CHECK(std::fabs(d_identity_residual(P, x, 2.5 * x)) < 1e-12);
    CHECK(decoupling_det(decoupling_vector(P, x), decoupling_vector(P, 2.5 * x)) == 0.0);
    CHECK(d_identity_residual(P, Vector::zeros(2), {1, 2}) == 0.0);
}

TEST_CASE("bound_chain hand values") {
    const auto P = e1_projector();
    const auto c = bound_chain(P, {3, 4}, {1, 2});
    CHECK(c.lower == 11.0);
    CHECK(c.middle == 11.0);
    CHECK(c.upper == doctest::Approx(5.0 * std::sqrt(5.0)).epsilon(1e-15));
    CHECK(c.upper == doctest::Approx(11.1803398875).epsilon(1e-10));
    CHECK(c.slack_lower == 0.0);
    CHECK(c.slack_upper == doctest::Approx(c.upper - 11.0));
    CHECK(c.holds);

    SUBCASE("collinear: all three equal |alpha| ||x||^2") {
        const Vector x{3, 4};
        const auto cc = bound_chain(P, x, -2.0 * x);
        CHECK(cc.lower == doctest::Approx(50.0).epsilon(1e-14));
        CHECK(cc.middle == doctest::Approx(50.0).epsilon(1e-14));
        CHECK(cc.upper == doctest::Approx(50.0).epsilon(1e-14));
        CHECK(cc.holds);
    }
    SUBCASE("x in V, y in V-perp") {
        const auto cc = bound_chain(P, {2, 0}, {0, 3});
        CHECK(cc.lower == 0.0);
        CHECK(cc.middle == 0.0);
        CHECK(cc.upper == 6.0);
    }
    SUBCASE("holds flag trips on a doctored chain") {
        CHECK_FALSE(BoundChainReport::make(2.0, 1.0, 3.0).holds);
        CHECK_FALSE(BoundChainReport::make(1.0, 3.5, 3.0).holds);
        CHECK(BoundChainReport::make(1.0, 3.0 + 1e-12, 3.0).holds);
    }
}

TEST_CASE("cs_gap_lower_bound hand values") {
    const auto P = e1_projector();
    const auto g = cs_gap_lower_bound(P, {3, 4}, {1, 2});
    CHECK(g.gap == 4.0);
    CHECK(g.bound == 4.0);
    const auto same = cs_gap_lower_bound(P, {3, 4}, {3, 4});
    CHECK(same.gap == 0.0);
    CHECK(same.bound == 0.0);
    const auto zero = cs_gap_lower_bound(Projector::zero(2), {3, 4}, {1, 2});
    CHECK(zero.bound == 0.0);
    CHECK(zero.gap >= zero.bound);
}

TEST_CASE("property: D-function identities on random instances") {
    oracle::Rng rng(2024);
    for (int t = 0; t < 3000; ++t) {
        const std::size_t n = rng.index(1, 16);
        std::vector<oracle::Vec> raw;
        const auto P = random_projector(rng, n, &raw);
        const auto Pc = P.complement();
        const oracle::Vec xr = rng.vec(n), yr = rng.vec(n), x2r = rng.vec(n);
        const Vector x(xr), y(yr), x2(x2r);
        const double lam = rng.uniform(-3, 3), mu = rng.uniform(-3, 3);
        const double nx = norm(x), ny = norm(y);
        const double eps = 1e-9 * nx * ny;
        const double d = d_function(P, x, y);

        // self value, complement symmetry, positivity, symmetry
        CHECK(std::fabs(d_function(P, x, x) - inner(x, x)) <= 1e-9 * inner(x, x));
        CHECK(std::fabs(d_function(Pc, x, y) - d) <= eps);
        CHECK(d >= 0.0);
        CHECK(d_function(P, y, x) == d);
        // absolute homogeneity, subadditivity
        CHECK(std::fabs(d_function(P, lam * x, mu * y) - std::fabs(lam * mu) * d) <= 1e-9 * std::fabs(lam * mu) * nx * ny);
        CHECK(d_function(P, x + x2, y) <= d + d_function(P, x2, y) + 1e-9 * (nx + norm(x2)) * ny);
        // projected arguments
        const auto vx = decoupling_vector(P, x), vy = decoupling_vector(P, y);
        CHECK(std::fabs(d_function(P, project(P, x), y) - vx.p * vy.p) <= eps);
        CHECK(std::fabs(d_function(P, complement_project(P, x), y) - vx.q * vy.q) <= eps);
        // reflection Px - P⊥x
        CHECK(std::fabs(d_function(P, project(P, x) - complement_project(P, x), y) - d) <= eps);
        // decoupled pair
        CHECK(d_function(P, project(P, x), complement_project(P, y)) <= eps);
        // CS chain and determinant identity
        CHECK(bound_chain(P, x, y).holds);
        CHECK(std::fabs(d_identity_residual(P, x, y)) <= 1e-9 * inner(x, x) * inner(y, y));
        // gap bound
        const auto g = cs_gap_lower_bound(P, x, y);
        CHECK(g.gap >= g.bound - 1e-9 * inner(x, x) * inner(y, y));
        // decoupling-vector route equals the norm route exactly; dense-matrix oracle within tolerance
        CHECK(d_function(vx, vy) == d);
        const auto m = oracle::projector_matrix(raw, n);
        CHECK(std::fabs(oracle::d_function(m, xr, yr) - d) <= eps);
    }
}
