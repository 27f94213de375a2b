#include "projineq/space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "projineq/errors.hpp"

namespace projineq {

namespace {

void require_same_dim(const Vector &x, const Vector &y, const char *what) {
    if (x.dim() != y.dim()) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(x.dim()) +
                             " vs " + std::to_string(y.dim()) + ")");
    }
}

// Subtracts from w its components along `basis`, twice.
void orthogonalize_against(std::vector<double> &w, const std::vector<Vector> &basis) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto &b : basis) {
            double c = 0.0;
            for (std::size_t i = 0; i < w.size(); ++i) c += w[i] * b[i];
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * b[i];
        }
    }
}

double euclid(const std::vector<double> &w) {
    double s = 0.0;
    for (double v : w) s += v * v;
    return std::sqrt(s);
}

} // namespace

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("Vector: dimension must be at least 1");
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!std::isfinite(coords_[i])) {
            throw DomainError("Vector: coordinate " + std::to_string(i) + " is not finite");
        }
    }
}

Vector::Vector(std::initializer_list<double> coords) : Vector(std::vector<double>(coords)) {}

Vector Vector::zeros(std::size_t n) { return Vector(std::vector<double>(n, 0.0)); }

Vector Vector::unit(std::size_t n, std::size_t axis) {
    std::vector<double> c(n, 0.0);
    c.at(axis) = 1.0;
    return Vector(std::move(c));
}

Vector operator+(const Vector &a, const Vector &b) {
    require_same_dim(a, b, "operator+");
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return Vector(std::move(c));
}

Vector operator-(const Vector &a, const Vector &b) {
    require_same_dim(a, b, "operator-");
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
    return Vector(std::move(c));
}

Vector operator*(double s, const Vector &a) {
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a[i];
    return Vector(std::move(c));
}

double inner(const Vector &x, const Vector &y) {
    require_same_dim(x, y, "inner");
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * y[i];
    return s;
}

double norm(const Vector &x) { return std::sqrt(inner(x, x)); }

void require_dim(const Vector &x, std::size_t n, const char *what) {
    if (x.dim() != n) {
        throw DimensionError(std::string(what) + ": vector has dimension " + std::to_string(x.dim()) +
                             ", projector acts on dimension " + std::to_string(n));
    }
}

Projector Projector::from_orthonormal(std::size_t ambient_dim, std::vector<Vector> basis, double tol) {
    if (ambient_dim == 0) throw DomainError("Projector: ambient dimension must be at least 1");
    if (basis.size() > ambient_dim) throw DomainError("Projector: more basis vectors than dimensions");
    for (const auto &b : basis) require_dim(b, ambient_dim, "Projector");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            if (std::fabs(inner(basis[i], basis[j]) - expected) > tol) {
                throw DomainError("Projector: basis is not orthonormal at (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
            }
        }
    }
    return Projector(ambient_dim, std::move(basis));
}

Projector Projector::zero(std::size_t ambient_dim) { return from_orthonormal(ambient_dim, {}); }

Projector Projector::identity(std::size_t ambient_dim) {
    std::vector<Vector> basis;
    basis.reserve(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(Vector::unit(ambient_dim, i));
    return from_orthonormal(ambient_dim, std::move(basis));
}

Projector Projector::complement() const {
    const std::size_t n = ambient_dim_;
    // Standard basis vectors are tried in order of decreasing distance from V; together
    // they span R^n, so n - k of them survive orthogonalization against V.
    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(n);
    for (std::size_t axis = 0; axis < n; ++axis) {
        std::vector<double> w(n, 0.0);
        w[axis] = 1.0;
        orthogonalize_against(w, basis_);
        order.emplace_back(-euclid(w), axis);
    }
    std::sort(order.begin(), order.end());

    std::vector<Vector> extended = basis_;
    std::vector<Vector> perp;
    for (const auto &[neg_residual, axis] : order) {
        if (extended.size() == n) break;
        std::vector<double> w(n, 0.0);
        w[axis] = 1.0;
        orthogonalize_against(w, extended);
        const double r = euclid(w);
        if (r <= 1e-8) continue;
        for (double &v : w) v /= r;
        Vector b(std::move(w));
        extended.push_back(b);
        perp.push_back(std::move(b));
    }
    return Projector(n, std::move(perp));
}

std::vector<double> Projector::coefficients(const Vector &x) const {
    require_dim(x, ambient_dim_, "Projector::coefficients");
    std::vector<double> c;
    c.reserve(basis_.size());
    for (const auto &b : basis_) c.push_back(inner(x, b));
    return c;
}

std::vector<double> Projector::matrix() const {
    const std::size_t n = ambient_dim_;
    std::vector<double> m(n * n, 0.0);
    for (const auto &b : basis_) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] += b[i] * b[j];
        }
    }
    return m;
}

Projector projector_from_spanning_set(std::span<const Vector> vectors, std::optional<double> tol) {
    if (vectors.empty()) {
        throw DomainError("projector_from_spanning_set: empty set has no ambient dimension");
    }
    return projector_from_spanning_set(vectors.front().dim(), vectors, tol);
}

Projector projector_from_spanning_set(std::size_t ambient_dim, std::span<const Vector> vectors,
                                      std::optional<double> tol) {
    if (ambient_dim == 0) throw DomainError("projector_from_spanning_set: ambient dimension is zero");
    double largest = 0.0;
    for (const auto &v : vectors) {
        require_dim(v, ambient_dim, "projector_from_spanning_set");
        largest = std::max(largest, norm(v));
    }
    const double drop_tol = tol.value_or(1e-10 * largest);
    if (tol && !(*tol > 0.0)) throw DomainError("projector_from_spanning_set: tol must be positive");

    std::vector<Vector> basis;
    for (const auto &v : vectors) {
        if (basis.size() == ambient_dim) break;
        std::vector<double> w(v.coords().begin(), v.coords().end());
        orthogonalize_against(w, basis);
        const double r = euclid(w);
        if (r <= drop_tol) continue;
        for (double &c : w) c /= r;
        basis.emplace_back(std::move(w));
    }
    return Projector(ambient_dim, std::move(basis));
}

Projector rank_one_projector(const Vector &z) {
    const double nz = norm(z);
    if (nz == 0.0) throw ZeroDirectionError("rank_one_projector: zero direction");
    std::vector<Vector> basis{(1.0 / nz) * z};
    return Projector::from_orthonormal(z.dim(), std::move(basis));
}

Vector project(const Projector &P, const Vector &x) {
    require_dim(x, P.ambient_dim(), "project");
    std::vector<double> out(x.dim(), 0.0);
    for (const auto &b : P.basis()) {
        const double c = inner(x, b);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * b[i];
    }
    return Vector(std::move(out));
}

Vector complement_project(const Projector &P, const Vector &x) { return x - project(P, x); }

DecouplingVector decoupling_vector(const Projector &P, const Vector &x) {
    require_dim(x, P.ambient_dim(), "decoupling_vector");
    return {norm(project(P, x)), norm(complement_project(P, x))};
}

double projected_inner(const Projector &P, const Vector &x, const Vector &y) {
    require_dim(x, P.ambient_dim(), "projected_inner");
    require_dim(y, P.ambient_dim(), "projected_inner");
    double s = 0.0;
    for (const auto &b : P.basis()) s += inner(x, b) * inner(y, b);
    return s;
}

} // namespace projineq
