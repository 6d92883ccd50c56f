#pragma once

#include <optional>

#include <Eigen/Dense>

#include "paramvex/solve_outcome.hpp"
#include "paramvex/tolerances.hpp"

namespace paramvex {

/// minimize objective . x subject to G x <= h, x free.
struct LpProblem {
    Eigen::VectorXd objective;
    Eigen::MatrixXd G;
    Eigen::VectorXd h;

    LpProblem(Eigen::VectorXd c, Eigen::MatrixXd G_in, Eigen::VectorXd h_in);
    int vars() const { return static_cast<int>(objective.size()); }
    int rows() const { return static_cast<int>(G.rows()); }
};

/**
 * Dense two-phase simplex with Bland's anti-cycling rule.
 *
 * Free variables are split into positive parts internally. Returns
 * Optimal with a vertex minimizer, Infeasible when the phase-1 optimum
 * stays above feasibility_eps, or Unbounded together with a certified
 * ray d (G d <= 0, objective . d < 0). Never returns InfNotAttained:
 * a finite polyhedral optimum is always attained at a vertex.
 *
 * Throws SimplexSafeguardError if the pivot count exceeds
 * 10 * (rows + cols)^2, which Bland's rule makes unreachable short of a bug.
 */
SolveOutcome solve_lp(const LpProblem& lp, const Tolerances& tol);

/// Phase-1 feasibility of { x | G x <= h }.
bool lp_feasible(const Eigen::MatrixXd& G, const Eigen::VectorXd& h, const Tolerances& tol);

/// A feasible point of { x | G x <= h } (a phase-1 vertex), or nullopt.
std::optional<Eigen::VectorXd> lp_feasible_point(const Eigen::MatrixXd& G, const Eigen::VectorXd& h,
                                                 const Tolerances& tol);

}  // namespace paramvex
