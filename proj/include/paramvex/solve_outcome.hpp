#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include <Eigen/Dense>

#include "paramvex/extended_real.hpp"

namespace paramvex {

enum class SolveStatus { Optimal, Infeasible, Unbounded, InfNotAttained };

std::string_view to_string(SolveStatus status);

/**
 * Result of one inner minimization min_x phi(x, y) over F(y).
 *
 * The value field realizes the extended-real conventions: +inf when F(y)
 * is empty, -inf when the cost is unbounded below AND when a finite
 * infimum is never attained (the latter keeps its infimum in
 * infimum_hint for diagnostics).
 */
struct SolveOutcome {
    SolveStatus status;
    ExtendedReal value;
    std::optional<Eigen::VectorXd> minimizer;      // Optimal only
    std::optional<double> infimum_hint;            // InfNotAttained only
    std::optional<Eigen::VectorXd> unbounded_ray;  // Unbounded via the LP kernel: certified descent ray

    static SolveOutcome optimal(double value, Eigen::VectorXd minimizer)
    {
        return {SolveStatus::Optimal, ExtendedReal::finite(value), std::move(minimizer), std::nullopt,
                std::nullopt};
    }
    static SolveOutcome infeasible()
    {
        return {SolveStatus::Infeasible, ExtendedReal::plus_infinity(), std::nullopt, std::nullopt,
                std::nullopt};
    }
    static SolveOutcome unbounded(std::optional<Eigen::VectorXd> ray = std::nullopt)
    {
        return {SolveStatus::Unbounded, ExtendedReal::minus_infinity(), std::nullopt, std::nullopt,
                std::move(ray)};
    }
    static SolveOutcome inf_not_attained(double infimum)
    {
        if (!std::isfinite(infimum)) {
            throw std::invalid_argument("SolveOutcome: infimum hint must be finite");
        }
        return {SolveStatus::InfNotAttained, ExtendedReal::minus_infinity(), std::nullopt, infimum,
                std::nullopt};
    }
};

/// Iteration safeguard tripped; with Bland's rule this indicates a bug, not bad luck.
class SimplexSafeguardError : public std::runtime_error {
public:
    explicit SimplexSafeguardError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative kernel hit its cap without meeting its convergence test.
class NoConvergenceError : public std::runtime_error {
public:
    explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace paramvex
