#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "paramvex/cost.hpp"
#include "paramvex/feasible_mapping.hpp"
#include "paramvex/geometry.hpp"
#include "paramvex/tolerances.hpp"

namespace paramvex {

/// Dense desk-scale caps on problem dimensions, overridable by callers.
struct DimensionLimits {
    int max_dim = 32;    // decision and parameter dimensions
    int max_rows = 128;  // constraint rows
};

/**
 * Declares the parameter sets on which the infimum is finite but never
 * attained (so F_phi(y) is not closed there). Detecting non-attainment
 * numerically is hopeless; catalog instances declare it instead.
 */
class AttainmentMeta {
public:
    static AttainmentMeta all_parameters();
    static AttainmentMeta boxes(std::vector<Box> regions);

    bool covers(const Eigen::VectorXd& y) const;
    bool intersects(const Ball& ball) const;

private:
    AttainmentMeta() = default;
    bool all_ = false;
    std::vector<Box> boxes_;
};

using ReferenceValueFn = std::function<ExtendedReal(const Eigen::VectorXd&)>;

/**
 * A parametric convex program: cost phi, feasible mapping F, and optional
 * catalog metadata (non-attainment declaration, closed-form value oracle).
 * Immutable after construction; all evaluation entry points are pure.
 */
class ParametricProgram {
public:
    ParametricProgram(CostSpec cost, FeasibleMapping feasible,
                      std::optional<AttainmentMeta> attainment = std::nullopt,
                      ReferenceValueFn reference = nullptr, DimensionLimits limits = {});

    int n() const { return cost_.n(); }
    int m() const { return cost_.m(); }
    const CostSpec& cost() const { return cost_; }
    const FeasibleMapping& feasible() const { return feasible_; }
    const std::optional<AttainmentMeta>& attainment_meta() const { return attainment_; }

    bool has_reference_value() const { return static_cast<bool>(reference_); }
    ExtendedReal reference_value(const Eigen::VectorXd& y) const;

private:
    CostSpec cost_;
    FeasibleMapping feasible_;
    std::optional<AttainmentMeta> attainment_;
    ReferenceValueFn reference_;
};

/// phi(x, y); finite for all finite inputs.
double evaluate_cost(const ParametricProgram& p, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// x in F(y), up to feasibility_eps.
bool feasible_membership(const ParametricProgram& p, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& y, const Tolerances& tol);

/// (x, y, mu) in G = epi phi intersect (graph F x R): feasible and mu >= phi(x,y) - value_eps.
bool feasible_epigraph_membership(const ParametricProgram& p, const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& y, double mu, const Tolerances& tol);

}  // namespace paramvex
