#pragma once

#include <Eigen/Dense>

#include "paramvex/program.hpp"
#include "paramvex/solve_outcome.hpp"
#include "paramvex/tolerances.hpp"

namespace paramvex {

/**
 * Kernel for Builtin 1-D costs. The polyhedral rows are reduced to an
 * interval; golden-section search handles compact intervals, and on
 * unbounded ones the builtin's declared limits at +/- infinity decide
 * between Unbounded, a finite infimum that is never attained, and an
 * attained minimum at the finite endpoint or in the interior.
 */
SolveOutcome solve_builtin_1d(const ParametricProgram& p, const Eigen::VectorXd& y,
                              const Tolerances& tol);

}  // namespace paramvex
