#pragma once

#include <vector>

#include <Eigen/Dense>

#include "paramvex/program.hpp"
#include "paramvex/solve_outcome.hpp"
#include "paramvex/tolerances.hpp"

namespace paramvex {

/**
 * One evaluation of the optimal-value function v(y) = min_x phi(x, y) over
 * F(y). Dispatches to the epigraph-LP, projected-gradient QP, or 1-D
 * builtin kernel by cost kind. The outcome's value field realizes the
 * extended-real conventions: +inf for an empty F(y), -inf for an unbounded
 * cost and for a finite infimum that is never attained.
 */
SolveOutcome value_function(const ParametricProgram& p, const Eigen::VectorXd& y,
                            const Tolerances& tol);

/// mu in F_phi(y), decided from a solve outcome at y (shared predicate).
bool cost_membership_of(const SolveOutcome& outcome, double mu, const Tolerances& tol);

/// mu in F_phi(y) = { mu | exists x in F(y), mu >= phi(x, y) }.
bool fcost_membership(const ParametricProgram& p, const Eigen::VectorXd& y, double mu,
                      const Tolerances& tol);

/**
 * v_phi(y) = min mu subject to mu in F_phi(y), reconstructed by geometric
 * bracket expansion and bisection against the membership predicate rather
 * than by reading the solver's optimum, so the equivalence of v and v_phi
 * is checked across two genuinely different numeric paths. Returns +inf
 * when no mu up to unbounded_threshold is a member, -inf when membership
 * still holds at -unbounded_threshold, and -inf on non-attained instances
 * (the minimum of a set without a minimum, by convention).
 */
ExtendedReal aux_value_function(const ParametricProgram& p, const Eigen::VectorXd& y,
                                const Tolerances& tol);

/// Sampled map y -> v(y) with per-point status.
struct ValueGrid {
    std::vector<Eigen::VectorXd> points;
    std::vector<ExtendedReal> values;
    std::vector<SolveStatus> statuses;

    std::size_t size() const { return points.size(); }
};

/// Evaluate v over the given points; results are ordered by point index
/// regardless of the evaluation schedule.
ValueGrid evaluate_grid(const ParametricProgram& p, const std::vector<Eigen::VectorXd>& pts,
                        const Tolerances& tol);

}  // namespace paramvex
