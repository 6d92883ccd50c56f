#include "paramvex/builtin_solver.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

namespace paramvex {

namespace {

using Fn = std::function<double(double)>;

double golden_section_min(const Fn& f, double lo, double hi)
{
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && (b - a) > 1e-12 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    double best = 0.5 * (a + b);
    // a closed interval can host its minimum at an endpoint
    if (f(lo) < f(best)) best = lo;
    if (f(hi) < f(best)) best = hi;
    return best;
}

/// Expand [anchor, ->) until f turns upward, then golden-section the bracket.
/// Only called when f eventually grows (limit +inf), so the loop terminates.
double expand_right_and_minimize(const Fn& f, double anchor)
{
    double step = std::max(1.0, 0.1 * std::abs(anchor));
    double b = anchor + step;
    double fb = f(b);
    double prev = anchor;
    for (int it = 0; it < 200; ++it) {
        step *= 2.0;
        const double c = b + step;
        const double fc = f(c);
        if (fc >= fb) return golden_section_min(f, prev, c);
        prev = b;
        b = c;
        fb = fc;
    }
    throw NoConvergenceError("solve_builtin_1d: bracket expansion cap exceeded");
}

struct Interval {
    std::optional<double> lo;
    std::optional<double> hi;
    bool empty = false;
};

Interval interval_from_rows(const FeasibleMapping& F, const Eigen::VectorXd& y, const Tolerances& tol)
{
    Interval iv;
    const Eigen::VectorXd rhs = F.rhs_at(y);
    for (int i = 0; i < F.rows(); ++i) {
        const double a = F.A()(i, 0);
        if (std::abs(a) <= 1e-12) {
            if (rhs[i] < -tol.feasibility_eps) iv.empty = true;  // 0.x <= negative
            continue;
        }
        const double bound = rhs[i] / a;
        if (a > 0.0) {
            if (!iv.hi || bound < *iv.hi) iv.hi = bound;
        } else {
            if (!iv.lo || bound > *iv.lo) iv.lo = bound;
        }
    }
    if (iv.lo && iv.hi && *iv.lo > *iv.hi + tol.feasibility_eps) iv.empty = true;
    return iv;
}

SolveOutcome point_outcome(const Fn& f, double x)
{
    Eigen::VectorXd v(1);
    v << x;
    return SolveOutcome::optimal(f(x), v);
}

/// Minimum over [anchor, +inf) given the limit of f along +inf.
SolveOutcome minimize_right_ray(const Fn& f, double anchor, const ExtendedReal& limit)
{
    if (limit.is_minus_infinity()) return SolveOutcome::unbounded();
    const double h = 1e-6 * (1.0 + std::abs(anchor));
    if (f(anchor + h) >= f(anchor)) {
        // convex and locally nondecreasing at the endpoint: global minimum there
        return point_outcome(f, anchor);
    }
    if (limit.is_plus_infinity()) {
        return point_outcome(f, expand_right_and_minimize(f, anchor));
    }
    // convex, decreasing at the endpoint, finite limit: strictly decreasing
    // along the whole ray, so the infimum is the limit and never attained
    return SolveOutcome::inf_not_attained(limit.value());
}

}  // namespace

SolveOutcome solve_builtin_1d(const ParametricProgram& p, const Eigen::VectorXd& y,
                              const Tolerances& tol)
{
    if (p.cost().kind() != CostSpec::Kind::Builtin || p.n() != 1) {
        throw std::invalid_argument("solve_builtin_1d: cost is not a 1-D builtin");
    }
    const Interval iv = interval_from_rows(p.feasible(), y, tol);
    if (iv.empty) return SolveOutcome::infeasible();

    const Fn f = [&](double x) {
        Eigen::VectorXd v(1);
        v << x;
        return evaluate_cost(p, v, y);
    };

    if (iv.lo && iv.hi) {
        const double lo = std::min(*iv.lo, *iv.hi);  // collapse eps-inverted bounds
        return point_outcome(f, golden_section_min(f, lo, *iv.hi));
    }

    const ExtendedReal limit_plus = p.cost().builtin_limit(true, y);
    const ExtendedReal limit_minus = p.cost().builtin_limit(false, y);

    if (iv.lo) {
        return minimize_right_ray(f, *iv.lo, limit_plus);
    }
    if (iv.hi) {
        // mirror x -> -x onto the right-ray case
        const Fn g = [&f](double t) { return f(-t); };
        SolveOutcome out = minimize_right_ray(g, -*iv.hi, limit_minus);
        if (out.status == SolveStatus::Optimal) {
            Eigen::VectorXd x(1);
            x << -(*out.minimizer)[0];
            return SolveOutcome::optimal(out.value.value(), x);
        }
        return out;
    }

    // whole line
    if (limit_plus.is_minus_infinity() || limit_minus.is_minus_infinity()) {
        return SolveOutcome::unbounded();
    }
    const double h = 1e-6;
    const double f0 = f(0.0);
    if (f(h) < f0) {
        if (limit_plus.is_finite()) return SolveOutcome::inf_not_attained(limit_plus.value());
        return point_outcome(f, expand_right_and_minimize(f, 0.0));
    }
    if (f(-h) < f0) {
        if (limit_minus.is_finite()) return SolveOutcome::inf_not_attained(limit_minus.value());
        const Fn g = [&f](double t) { return f(-t); };
        const double t_star = expand_right_and_minimize(g, 0.0);
        return point_outcome(f, -t_star);
    }
    // locally nondecreasing both ways at 0: minimum within [-h, h]
    return point_outcome(f, golden_section_min(f, -h, h));
}

}  // namespace paramvex
