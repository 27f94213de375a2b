#include "projineq/prob.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "projineq/errors.hpp"

namespace projineq {

std::shared_ptr<const ProbabilitySpace> ProbabilitySpace::create(std::vector<double> weights, double tol) {
    if (weights.empty()) throw DomainError("ProbabilitySpace: at least one outcome is required");
    double total = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
            throw DomainError("ProbabilitySpace: weight " + std::to_string(i) +
                              " is negative or not finite");
        }
        total += weights[i];
    }
    if (std::fabs(total - 1.0) > tol) {
        throw DomainError("ProbabilitySpace: weights sum to " + std::to_string(total) + ", not 1");
    }
    return std::shared_ptr<const ProbabilitySpace>(new ProbabilitySpace(std::move(weights)));
}

std::shared_ptr<const ProbabilitySpace> ProbabilitySpace::uniform(std::size_t outcomes) {
    if (outcomes == 0) throw DomainError("ProbabilitySpace: at least one outcome is required");
    return create(std::vector<double>(outcomes, 1.0 / static_cast<double>(outcomes)));
}

DiscreteRandomVariable::DiscreteRandomVariable(SpaceRef space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) throw DomainError("DiscreteRandomVariable: null probability space");
    if (values_.size() != space_->size()) {
        throw DimensionError("DiscreteRandomVariable: " + std::to_string(values_.size()) +
                             " values for " + std::to_string(space_->size()) + " outcomes");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DomainError("DiscreteRandomVariable: value " + std::to_string(i) + " is not finite");
        }
    }
}

DiscreteRandomVariable DiscreteRandomVariable::constant(SpaceRef space, double c) {
    const std::size_t m = space ? space->size() : 0;
    return DiscreteRandomVariable(std::move(space), std::vector<double>(m, c));
}

DiscreteRandomVariable DiscreteRandomVariable::abs_pow(double e) const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double a = std::fabs(values_[i]);
        out[i] = e == 1.0 ? a : std::pow(a, e);
    }
    return DiscreteRandomVariable(space_, std::move(out));
}

DiscreteRandomVariable DiscreteRandomVariable::scaled(double c) const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * values_[i];
    return DiscreteRandomVariable(space_, std::move(out));
}

Vector DiscreteRandomVariable::embed() const {
    const auto w = space_->weights();
    std::vector<double> c(values_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = values_[i] * std::sqrt(w[i]);
    return Vector(std::move(c));
}

void require_same_space(const RandomVariable &X, const RandomVariable &Y) {
    if (X.space() == Y.space()) return;
    const auto wx = X.space()->weights();
    const auto wy = Y.space()->weights();
    if (!std::equal(wx.begin(), wx.end(), wy.begin(), wy.end())) {
        throw DimensionError("random variables live on different probability spaces");
    }
}

double expectation(const RandomVariable &X) {
    const auto w = X.space()->weights();
    const auto x = X.values();
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * x[i];
    return s;
}

double l2_inner(const RandomVariable &X, const RandomVariable &Y) {
    require_same_space(X, Y);
    const auto w = X.space()->weights();
    const auto x = X.values();
    const auto y = Y.values();
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * x[i] * y[i];
    return s;
}

double l2_norm(const RandomVariable &X) { return std::sqrt(l2_inner(X, X)); }

double stddev(const RandomVariable &X) { return std::sqrt(std::max(0.0, covariance(X, X))); }

double covariance(const RandomVariable &X, const RandomVariable &Y) {
    require_same_space(X, Y);
    const double mx = expectation(X);
    const double my = expectation(Y);
    const auto w = X.space()->weights();
    const auto x = X.values();
    const auto y = Y.values();
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * (x[i] - mx) * (y[i] - my);
    return s;
}

double walker_radicand(const RandomVariable &X, const RandomVariable &Y) {
    require_same_space(X, Y);
    const double deflation =
        std::fabs(expectation(X)) * stddev(Y) - std::fabs(expectation(Y)) * stddev(X);
    return l2_inner(X, X) * l2_inner(Y, Y) - deflation * deflation;
}

double walker_bound(const RandomVariable &X, const RandomVariable &Y) {
    return std::sqrt(std::max(0.0, walker_radicand(X, Y)));
}

BoundChainReport walker_chain(const RandomVariable &X, const RandomVariable &Y, double tol) {
    return BoundChainReport::make(std::fabs(l2_inner(X, Y)), walker_bound(X, Y), l2_norm(X) * l2_norm(Y),
                                  tol);
}

SharpeRatio sharpe_ratio(const RandomVariable &X, double sigma_floor) {
    SharpeRatio sr;
    sr.mean = expectation(X);
    sr.sigma = stddev(X);
    if (sr.sigma > sigma_floor) sr.value = sr.mean / sr.sigma;
    return sr;
}

SharpeEqualization sharpe_equalization_gap(const RandomVariable &X, const RandomVariable &Y, double tol) {
    require_same_space(X, Y);
    SharpeEqualization eq;
    eq.gap = std::fabs(expectation(X)) * stddev(Y) - std::fabs(expectation(Y)) * stddev(X);
    eq.equalized = std::fabs(eq.gap) <= tol * l2_norm(X) * l2_norm(Y);
    return eq;
}

} // namespace projineq
