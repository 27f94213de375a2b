#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "projineq/dfun.hpp"
#include "projineq/space.hpp"
#include "projineq/tolerance.hpp"

namespace projineq {

/// Finite outcome space with probability weights summing to one.
class ProbabilitySpace {
public:
    /// Validates nonnegativity and |sum - 1| <= tol; weights are stored as given.
    static std::shared_ptr<const ProbabilitySpace> create(std::vector<double> weights,
                                                          double tol = kRelTolerance);
    static std::shared_ptr<const ProbabilitySpace> uniform(std::size_t outcomes);

    std::size_t size() const noexcept { return weights_.size(); }
    std::span<const double> weights() const noexcept { return weights_; }

private:
    explicit ProbabilitySpace(std::vector<double> w) : weights_(std::move(w)) {}
    std::vector<double> weights_;
};

using SpaceRef = std::shared_ptr<const ProbabilitySpace>;

/// Real random variable on a shared ProbabilitySpace.
class DiscreteRandomVariable {
public:
    DiscreteRandomVariable(SpaceRef space, std::vector<double> values);

    static DiscreteRandomVariable constant(SpaceRef space, double c);

    const SpaceRef &space() const noexcept { return space_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    /// |X|^e outcome-wise.
    DiscreteRandomVariable abs_pow(double e) const;
    DiscreteRandomVariable abs() const { return abs_pow(1.0); }
    DiscreteRandomVariable scaled(double c) const;

    /// Coordinates x_i * sqrt(w_i): an isometry onto R^m with the dot product.
    Vector embed() const;

private:
    SpaceRef space_;
    std::vector<double> values_;
};

using RandomVariable = DiscreteRandomVariable;

/// Throws DimensionError unless X and Y live on the same outcome space.
void require_same_space(const RandomVariable &X, const RandomVariable &Y);

double expectation(const RandomVariable &X);
double l2_inner(const RandomVariable &X, const RandomVariable &Y);
double l2_norm(const RandomVariable &X);
/// sqrt(E X^2 - (E X)^2), evaluated from centered values so it cannot go negative.
double stddev(const RandomVariable &X);
double covariance(const RandomVariable &X, const RandomVariable &Y);

/// Raw ||X||^2 ||Y||^2 - (|E X| s_Y - |E Y| s_X)^2 before clamping; may dip below zero by rounding.
double walker_radicand(const RandomVariable &X, const RandomVariable &Y);
/// Square root of the clamped Walker radicand.
double walker_bound(const RandomVariable &X, const RandomVariable &Y);
/// |E(XY)| <= walker_bound <= ||X||_2 ||Y||_2.
BoundChainReport walker_chain(const RandomVariable &X, const RandomVariable &Y,
                              double tol = kRelTolerance);

struct SharpeRatio {
    double mean = 0.0;
    double sigma = 0.0;
    std::optional<double> value;  ///< empty when sigma <= floor

    bool defined() const noexcept { return value.has_value(); }
};

SharpeRatio sharpe_ratio(const RandomVariable &X, double sigma_floor = kSigmaFloor);

struct SharpeEqualization {
    double gap = 0.0;     ///< |E X| s_Y - |E Y| s_X
    bool equalized = false;
};

SharpeEqualization sharpe_equalization_gap(const RandomVariable &X, const RandomVariable &Y,
                                           double tol = kRelTolerance);

} // namespace projineq
