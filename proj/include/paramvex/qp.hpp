#pragma once

#include <Eigen/Dense>

#include "paramvex/program.hpp"
#include "paramvex/solve_outcome.hpp"
#include "paramvex/tolerances.hpp"

namespace paramvex {

struct QpOptions {
    int max_iterations = 200000;
    int dykstra_max_sweeps = 5000;
};

/**
 * Euclidean projection of `point` onto { x | A x <= rhs } by Dykstra's
 * cyclic halfspace projections. Throws NoConvergenceError when the sweep
 * cap is reached before the iterate settles inside the polyhedron.
 */
Eigen::VectorXd dykstra_project(const Eigen::MatrixXd& A, const Eigen::VectorXd& rhs,
                                const Eigen::VectorXd& point, int max_sweeps, double feasibility_eps);

/**
 * Projected gradient descent for Quadratic costs over F(y).
 *
 * Feasibility is decided first by a phase-1 LP. Iterates start at a
 * phase-1 vertex with step 1/lambda_max(Q_xx); the outcome is Optimal at
 * the first iterate whose projected-gradient norm is <= value_eps, or
 * Unbounded when the iterate norm passes unbounded_threshold while the
 * cost still decreases (a heuristic: PSD quadratics escape polyhedra only
 * along flat directions). Hitting the iteration cap raises
 * NoConvergenceError rather than returning a wrong answer.
 */
SolveOutcome solve_qp_projected(const ParametricProgram& p, const Eigen::VectorXd& y,
                                const Tolerances& tol, const QpOptions& opts = {});

}  // namespace paramvex
