#pragma once

#include "projineq/prob.hpp"
#include "projineq/tolerance.hpp"

namespace projineq {

/// Conjugate exponents p, q > 1 with 1/p + 1/q = 1.
class ConjugatePair {
public:
    /// Throws DomainError unless p, q > 1 and |1/p + 1/q - 1| <= tol.
    ConjugatePair(double p, double q, double tol = kConjugateTolerance);
    /// q = p / (p - 1).
    static ConjugatePair from_p(double p);

    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }

private:
    double p_;
    double q_;
};

struct HoelderReport {
    double lhs = 0.0;          ///< E|XY|
    double refined = 0.0;      ///< refined Hoelder bound
    double classical = 0.0;    ///< ||X||_p ||Y||_q
    double young_term = 0.0;   ///< Young-based intermediate bound
    double improvement = 0.0;  ///< classical - refined
    bool holds = true;         ///< lhs <= refined <= classical, each up to tol * classical
};

struct NewWalkerP2 {
    double bound = 0.0;       ///< (||X|| ||Y|| + walker_bound(|X|,|Y|)) / 2
    double seeh_bound = 0.0;  ///< walker_bound(|X|, |Y|)
};

/// (E|X|^p)^(1/p); throws DomainError for p < 1.
double lp_norm(const RandomVariable &X, double p);

/// (1/p^2 + 1/q^2)||X||_p||Y||_q + (2/pq)||X||_p^(1-p/2)||Y||_q^(1-q/2) E(|X|^(p/2)|Y|^(q/2)).
/// Returns 0 when either norm vanishes.
double young_intermediate_bound(const RandomVariable &X, const RandomVariable &Y,
                                const ConjugatePair &pair);

/// E|XY| <= refined <= ||X||_p ||Y||_q, where the refinement applies the Walker bound to
/// U = |X|^(p/2), V = |Y|^(q/2).
HoelderReport refined_hoelder(const RandomVariable &X, const RandomVariable &Y,
                              const ConjugatePair &pair, double tol = kRelTolerance);

/// p = q = 2 specialization, with moments of |X| and |Y|.
NewWalkerP2 new_walker_p2(const RandomVariable &X, const RandomVariable &Y);

} // namespace projineq
