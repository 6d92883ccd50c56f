#include "paramvex/program.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace paramvex {

AttainmentMeta AttainmentMeta::all_parameters()
{
    AttainmentMeta meta;
    meta.all_ = true;
    return meta;
}

AttainmentMeta AttainmentMeta::boxes(std::vector<Box> regions)
{
    AttainmentMeta meta;
    meta.boxes_ = std::move(regions);
    return meta;
}

bool AttainmentMeta::covers(const Eigen::VectorXd& y) const
{
    if (all_) return true;
    for (const auto& box : boxes_) {
        if (box.contains(y)) return true;
    }
    return false;
}

bool AttainmentMeta::intersects(const Ball& ball) const
{
    if (all_) return true;
    for (const auto& box : boxes_) {
        // distance from the ball center to the box, via the clamped point
        double dist_sq = 0.0;
        for (int i = 0; i < box.dim(); ++i) {
            const double clamped = std::clamp(ball.center[i], box.lower[i], box.upper[i]);
            const double d = ball.center[i] - clamped;
            dist_sq += d * d;
        }
        if (std::sqrt(dist_sq) < ball.radius) return true;
    }
    return false;
}

ParametricProgram::ParametricProgram(CostSpec cost, FeasibleMapping feasible,
                                     std::optional<AttainmentMeta> attainment,
                                     ReferenceValueFn reference, DimensionLimits limits)
    : cost_(std::move(cost)),
      feasible_(std::move(feasible)),
      attainment_(std::move(attainment)),
      reference_(std::move(reference))
{
    if (cost_.n() != feasible_.n() || cost_.m() != feasible_.m()) {
        throw std::invalid_argument("ParametricProgram: cost and feasible mapping dimensions disagree");
    }
    if (cost_.n() > limits.max_dim || cost_.m() > limits.max_dim) {
        throw std::invalid_argument("ParametricProgram: dimension exceeds cap " +
                                    std::to_string(limits.max_dim));
    }
    if (feasible_.rows() > limits.max_rows) {
        throw std::invalid_argument("ParametricProgram: constraint rows exceed cap " +
                                    std::to_string(limits.max_rows));
    }
}

ExtendedReal ParametricProgram::reference_value(const Eigen::VectorXd& y) const
{
    if (!reference_) throw std::logic_error("ParametricProgram: no reference value oracle");
    return reference_(y);
}

double evaluate_cost(const ParametricProgram& p, const Eigen::VectorXd& x, const Eigen::VectorXd& y)
{
    const double v = p.cost().evaluate(x, y);
    if (!std::isfinite(v)) {
        throw std::runtime_error("evaluate_cost: cost evaluated to a non-finite value");
    }
    return v;
}

bool feasible_membership(const ParametricProgram& p, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& y, const Tolerances& tol)
{
    return p.feasible().contains(x, y, tol.feasibility_eps);
}

bool feasible_epigraph_membership(const ParametricProgram& p, const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& y, double mu, const Tolerances& tol)
{
    if (!std::isfinite(mu)) throw std::invalid_argument("feasible_epigraph_membership: mu must be finite");
    return feasible_membership(p, x, y, tol) && mu >= evaluate_cost(p, x, y) - tol.value_eps;
}

}  // namespace paramvex
