#include "paramvex/qp.hpp"

#include <cmath>
#include <stdexcept>

#include "paramvex/lp.hpp"

namespace paramvex {

Eigen::VectorXd dykstra_project(const Eigen::MatrixXd& A, const Eigen::VectorXd& rhs,
                                const Eigen::VectorXd& point, int max_sweeps, double feasibility_eps)
{
    const int k = static_cast<int>(A.rows());
    if (k == 0) return point;

    Eigen::VectorXd x = point;
    Eigen::MatrixXd increments = Eigen::MatrixXd::Zero(k, A.cols());
    Eigen::VectorXd row_norm_sq(k);
    for (int i = 0; i < k; ++i) row_norm_sq[i] = A.row(i).squaredNorm();

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double moved = 0.0;
        for (int i = 0; i < k; ++i) {
            if (row_norm_sq[i] < 1e-24) continue;  // 0.x <= rhs rows carry no geometry
            const Eigen::VectorXd z = x + increments.row(i).transpose();
            const double violation = A.row(i).dot(z) - rhs[i];
            Eigen::VectorXd projected =
                violation > 0.0 ? (z - (violation / row_norm_sq[i]) * A.row(i).transpose()).eval() : z;
            increments.row(i) = (z - projected).transpose();
            moved = std::max(moved, (projected - x).cwiseAbs().maxCoeff());
            x = std::move(projected);
        }
        if (moved < 1e-13 * (1.0 + x.cwiseAbs().maxCoeff())) {
            const double max_violation = (A * x - rhs).maxCoeff();
            if (max_violation <= feasibility_eps) return x;
        }
    }
    throw NoConvergenceError("dykstra_project: sweep cap reached before convergence");
}

SolveOutcome solve_qp_projected(const ParametricProgram& p, const Eigen::VectorXd& y,
                                const Tolerances& tol, const QpOptions& opts)
{
    if (p.cost().kind() != CostSpec::Kind::Quadratic) {
        throw std::invalid_argument("solve_qp_projected: cost is not quadratic");
    }
    const int n = p.n();
    const Eigen::MatrixXd& A = p.feasible().A();
    const Eigen::VectorXd rhs = p.feasible().rhs_at(y);

    const auto start = lp_feasible_point(A, rhs, tol);
    if (!start) return SolveOutcome::infeasible();

    const Eigen::MatrixXd& Q = p.cost().quadratic_matrix();
    const Eigen::MatrixXd Qxx = Q.topLeftCorner(n, n);
    const Eigen::VectorXd qlin = Q.topRightCorner(n, p.m()) * y + p.cost().linear_term().head(n);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Qxx);
    const double curvature = std::max(eig.eigenvalues().maxCoeff(), 0.0);
    const double step = std::min(1.0 / std::max(curvature, 1e-8), 1e3);

    // Iterates escaping a polyhedron do so along a flat recession direction,
    // where the per-step drift is constant. Checkpoints let us certify such a
    // direction (feasible, zero curvature in effect, decreasing cost) and move
    // the iterate past the threshold instead of crawling there.
    constexpr int kCheckpointInterval = 64;
    Eigen::VectorXd checkpoint;
    double checkpoint_cost = 0.0;

    Eigen::VectorXd x = *start;
    double cost = evaluate_cost(p, x, y);
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        const Eigen::VectorXd grad = Qxx * x + qlin;
        const Eigen::VectorXd next =
            dykstra_project(A, rhs, x - step * grad, opts.dykstra_max_sweeps, tol.feasibility_eps);
        const double pg_norm = (x - next).norm() / step;
        if (pg_norm <= tol.value_eps) {
            return SolveOutcome::optimal(evaluate_cost(p, next, y), next);
        }
        const double next_cost = evaluate_cost(p, next, y);
        if (next.norm() > tol.unbounded_threshold && next_cost < cost) {
            return SolveOutcome::unbounded();
        }

        if (iter % kCheckpointInterval == 0) {
            if (checkpoint.size() > 0 && next_cost < checkpoint_cost) {
                const Eigen::VectorXd drift = next - checkpoint;
                if (drift.norm() > 1e-9) {
                    const Eigen::VectorXd dir = drift.normalized();
                    const bool recession =
                        A.rows() == 0 || (A * dir).maxCoeff() <= 1e-12;
                    if (recession) {
                        const Eigen::VectorXd far = next + 2.0 * tol.unbounded_threshold * dir;
                        const double far_cost = evaluate_cost(p, far, y);
                        if (far_cost < next_cost - 1e-9 * (1.0 + std::abs(next_cost)) &&
                            far.norm() > tol.unbounded_threshold) {
                            return SolveOutcome::unbounded(dir);
                        }
                    }
                }
            }
            checkpoint = next;
            checkpoint_cost = next_cost;
        }

        x = next;
        cost = next_cost;
    }
    throw NoConvergenceError("solve_qp_projected: iteration cap reached before stationarity");
}

}  // namespace paramvex
