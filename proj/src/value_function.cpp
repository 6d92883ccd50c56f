#include "paramvex/value_function.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "paramvex/builtin_solver.hpp"
#include "paramvex/lp.hpp"
#include "paramvex/qp.hpp"

namespace paramvex {

namespace {

/// Epigraph reformulation for max-of-affine costs:
/// min t  s.t.  p_i.x - t <= -(q_i.y + r_i),  A x <= c + B y.
SolveOutcome solve_affine_max(const ParametricProgram& p, const Eigen::VectorXd& y,
                              const Tolerances& tol)
{
    const int n = p.n();
    const auto& pieces = p.cost().pieces();
    const int npieces = static_cast<int>(pieces.size());
    const int k = p.feasible().rows();

    Eigen::MatrixXd G(npieces + k, n + 1);
    Eigen::VectorXd h(npieces + k);
    for (int i = 0; i < npieces; ++i) {
        G.row(i).head(n) = pieces[i].p.transpose();
        G(i, n) = -1.0;
        h[i] = -(pieces[i].q.dot(y) + pieces[i].r);
    }
    if (k > 0) {
        G.block(npieces, 0, k, n) = p.feasible().A();
        G.block(npieces, n, k, 1).setZero();
        h.tail(k) = p.feasible().rhs_at(y);
    }
    Eigen::VectorXd objective = Eigen::VectorXd::Zero(n + 1);
    objective[n] = 1.0;

    SolveOutcome lp_out = solve_lp(LpProblem(std::move(objective), std::move(G), std::move(h)), tol);
    switch (lp_out.status) {
    case SolveStatus::Optimal:
        return SolveOutcome::optimal(lp_out.value.value(), lp_out.minimizer->head(n));
    case SolveStatus::Unbounded: {
        std::optional<Eigen::VectorXd> ray;
        if (lp_out.unbounded_ray) {
            Eigen::VectorXd dx = lp_out.unbounded_ray->head(n);
            const double scale = dx.cwiseAbs().maxCoeff();
            if (scale > 0.0) ray = dx / scale;
        }
        return SolveOutcome::unbounded(std::move(ray));
    }
    default:
        return lp_out;  // Infeasible; the LP kernel never reports InfNotAttained
    }
}

}  // namespace

SolveOutcome value_function(const ParametricProgram& p, const Eigen::VectorXd& y,
                            const Tolerances& tol)
{
    if (y.size() != p.m()) throw std::invalid_argument("value_function: parameter dimension mismatch");
    switch (p.cost().kind()) {
    case CostSpec::Kind::AffineMax: return solve_affine_max(p, y, tol);
    case CostSpec::Kind::Quadratic: return solve_qp_projected(p, y, tol);
    case CostSpec::Kind::Builtin: return solve_builtin_1d(p, y, tol);
    }
    throw std::logic_error("value_function: unknown cost kind");
}

bool cost_membership_of(const SolveOutcome& outcome, double mu, const Tolerances& tol)
{
    switch (outcome.status) {
    case SolveStatus::Optimal: return mu >= outcome.value.value() - tol.value_eps;
    case SolveStatus::Unbounded: return true;
    case SolveStatus::InfNotAttained: return mu > *outcome.infimum_hint + tol.value_eps;
    case SolveStatus::Infeasible: return false;
    }
    throw std::logic_error("cost_membership_of: unknown status");
}

bool fcost_membership(const ParametricProgram& p, const Eigen::VectorXd& y, double mu,
                      const Tolerances& tol)
{
    if (!std::isfinite(mu)) throw std::invalid_argument("fcost_membership: mu must be finite");
    return cost_membership_of(value_function(p, y, tol), mu, tol);
}

ExtendedReal aux_value_function(const ParametricProgram& p, const Eigen::VectorXd& y,
                                const Tolerances& tol)
{
    // One solve fixes the membership predicate; every probe below queries it.
    const SolveOutcome outcome = value_function(p, y, tol);
    if (outcome.status == SolveStatus::InfNotAttained) {
        return ExtendedReal::minus_infinity();
    }
    const auto member = [&](double mu) { return cost_membership_of(outcome, mu, tol); };

    const double cap = tol.unbounded_threshold;
    if (!member(cap)) return ExtendedReal::plus_infinity();
    if (member(-cap)) return ExtendedReal::minus_infinity();

    double hi = 1.0;
    int guard = 0;
    while (!member(hi)) {
        hi = std::min(hi * 2.0, cap);
        if (++guard > 128) throw NoConvergenceError("aux_value_function: bracket expansion cap exceeded");
    }
    double lo = -1.0;
    guard = 0;
    while (member(lo)) {
        hi = lo;
        lo = std::max(lo * 2.0, -cap);
        if (++guard > 128) throw NoConvergenceError("aux_value_function: bracket expansion cap exceeded");
    }
    for (int it = 0; it < 200 && (hi - lo) > 0.01 * tol.value_eps; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (member(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return ExtendedReal::finite(0.5 * (lo + hi));
}

ValueGrid evaluate_grid(const ParametricProgram& p, const std::vector<Eigen::VectorXd>& pts,
                        const Tolerances& tol)
{
    std::vector<SolveOutcome> outcomes(pts.size(), SolveOutcome::infeasible());

    const std::size_t hw = std::max<std::size_t>(std::thread::hardware_concurrency(), 1);
    const std::size_t workers = std::min<std::size_t>(hw, 8);
    if (workers > 1 && pts.size() >= 32) {
        std::vector<std::future<void>> futures;
        const std::size_t chunk = (pts.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(begin + chunk, pts.size());
            if (begin >= end) break;
            futures.push_back(std::async(std::launch::async, [&, begin, end] {
                for (std::size_t i = begin; i < end; ++i) outcomes[i] = value_function(p, pts[i], tol);
            }));
        }
        for (auto& f : futures) f.get();
    } else {
        for (std::size_t i = 0; i < pts.size(); ++i) outcomes[i] = value_function(p, pts[i], tol);
    }

    ValueGrid grid;
    grid.points = pts;
    grid.values.reserve(pts.size());
    grid.statuses.reserve(pts.size());
    for (const auto& out : outcomes) {
        grid.values.push_back(out.value);
        grid.statuses.push_back(out.status);
    }
    return grid;
}

}  // namespace paramvex
