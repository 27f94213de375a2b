#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "projineq/tolerance.hpp"

namespace projineq {

/// Dense real coordinate vector of fixed dimension n >= 1 with finite entries.
class Vector {
public:
    explicit Vector(std::vector<double> coords);
    Vector(std::initializer_list<double> coords);

    static Vector zeros(std::size_t n);
    static Vector unit(std::size_t n, std::size_t axis);

    std::size_t dim() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const noexcept { return coords_; }

    friend Vector operator+(const Vector &a, const Vector &b);
    friend Vector operator-(const Vector &a, const Vector &b);
    friend Vector operator*(double s, const Vector &a);
    friend Vector operator-(const Vector &a) { return -1.0 * a; }

private:
    std::vector<double> coords_;
};

double inner(const Vector &x, const Vector &y);
double norm(const Vector &x);

/// Orthogonal projector onto V = span(basis), stored as an orthonormal basis of V.
/// k = 0 is the null projector.
class Projector {
public:
    /// Wraps an already orthonormal basis; throws DomainError if the basis is not
    /// orthonormal within tol.
    static Projector from_orthonormal(std::size_t ambient_dim, std::vector<Vector> basis,
                                      double tol = kOrthTolerance);
    static Projector zero(std::size_t ambient_dim);
    static Projector identity(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t rank() const noexcept { return basis_.size(); }
    const std::vector<Vector> &basis() const noexcept { return basis_; }

    /// Projector onto V-perp, with basis completed from the standard basis.
    Projector complement() const;

    /// Coefficients <x, b_j> of x in the stored basis.
    std::vector<double> coefficients(const Vector &x) const;

    /// Dense n x n row-major matrix form.
    std::vector<double> matrix() const;

private:
    Projector(std::size_t n, std::vector<Vector> basis) : ambient_dim_(n), basis_(std::move(basis)) {}

    std::size_t ambient_dim_;
    std::vector<Vector> basis_;

    friend Projector projector_from_spanning_set(std::size_t, std::span<const Vector>,
                                                 std::optional<double>);
};

/// The pair v_P(x) = (||Px||, ||P-perp x||).
struct DecouplingVector {
    double p = 0.0;
    double q = 0.0;
};

/// Orthonormalizes `vectors` with two Gram-Schmidt passes; inputs whose residual norm
/// is <= tol are dropped. Default tol is 1e-10 times the largest input norm.
/// Throws DimensionError on mixed dimensions and DomainError if `vectors` is empty
/// (no ambient dimension can be inferred).
Projector projector_from_spanning_set(std::span<const Vector> vectors,
                                      std::optional<double> tol = std::nullopt);
/// Same, with an explicit ambient dimension so that an empty set yields P = 0.
Projector projector_from_spanning_set(std::size_t ambient_dim, std::span<const Vector> vectors,
                                      std::optional<double> tol = std::nullopt);

/// P_z with basis {z/||z||}. Throws ZeroDirectionError if ||z|| = 0.
Projector rank_one_projector(const Vector &z);

Vector project(const Projector &P, const Vector &x);
Vector complement_project(const Projector &P, const Vector &x);
DecouplingVector decoupling_vector(const Projector &P, const Vector &x);

/// <Px, y> evaluated as sum_j <x,b_j><y,b_j> without forming Px.
double projected_inner(const Projector &P, const Vector &x, const Vector &y);

/// Throws DimensionError unless dim(x) == n.
void require_dim(const Vector &x, std::size_t n, const char *what);

} // namespace projineq
