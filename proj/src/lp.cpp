#include "paramvex/lp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace paramvex {

namespace {

constexpr double kPivotEps = 1e-9;

/**
 * Full dense tableau over the standard form
 *   min c.(u - w)  s.t.  G(u - w) + s = h,  u, w, s, a >= 0
 * with one artificial column per negative-rhs row. Column layout:
 * u(0..nv-1), w(nv..2nv-1), slack(2nv..2nv+k-1), artificial(rest).
 * Rows 0..k-1 are constraints, row k the phase-2 cost, row k+1 the
 * phase-1 cost; both cost rows are eliminated through every pivot.
 */
class SimplexTableau {
public:
    SimplexTableau(const Eigen::VectorXd& objective, const Eigen::MatrixXd& G,
                   const Eigen::VectorXd& h)
        : nv_(static_cast<int>(G.cols())), k_(static_cast<int>(G.rows()))
    {
        int negative_rows = 0;
        for (int i = 0; i < k_; ++i) {
            if (h[i] < 0.0) ++negative_rows;
        }
        n_art_ = negative_rows;
        ncols_ = 2 * nv_ + k_ + n_art_;
        T_ = Eigen::MatrixXd::Zero(k_ + 2, ncols_ + 1);
        basis_.assign(k_, -1);
        is_basic_.assign(ncols_, false);
        row_active_.assign(k_, true);
        col_banned_.assign(ncols_, false);
        max_pivots_ = 10L * static_cast<long>(k_ + ncols_) * static_cast<long>(k_ + ncols_);

        int art = 0;
        for (int i = 0; i < k_; ++i) {
            const double sign = h[i] < 0.0 ? -1.0 : 1.0;
            for (int j = 0; j < nv_; ++j) {
                T_(i, j) = sign * G(i, j);
                T_(i, nv_ + j) = -sign * G(i, j);
            }
            T_(i, 2 * nv_ + i) = sign;
            T_(i, ncols_) = sign * h[i];
            if (h[i] < 0.0) {
                const int acol = 2 * nv_ + k_ + art++;
                T_(i, acol) = 1.0;
                set_basis(i, acol);
            } else {
                set_basis(i, 2 * nv_ + i);
            }
        }
        for (int j = 0; j < nv_; ++j) {
            T_(k_, j) = objective[j];
            T_(k_, nv_ + j) = -objective[j];
        }
        for (int a = 0; a < n_art_; ++a) T_(k_ + 1, 2 * nv_ + k_ + a) = 1.0;
        for (int i = 0; i < k_; ++i) {
            if (is_artificial(basis_[i])) T_.row(k_ + 1) -= T_.row(i);
        }
    }

    bool run_phase1(double feasibility_eps)
    {
        while (true) {
            const Step s = step(k_ + 1, /*phase1=*/true);
            if (s == Step::Unbounded) {
                throw SimplexSafeguardError("simplex: phase-1 objective reported unbounded");
            }
            if (s == Step::Optimal) break;
        }
        if (-T_(k_ + 1, ncols_) > feasibility_eps) return false;
        remove_artificials();
        return true;
    }

    SolveOutcome run_phase2()
    {
        while (true) {
            const Step s = step(k_, /*phase1=*/false);
            if (s == Step::Optimal) {
                return SolveOutcome::optimal(-T_(k_, ncols_), extract_x());
            }
            if (s == Step::Unbounded) {
                return SolveOutcome::unbounded(extract_ray());
            }
        }
    }

    Eigen::VectorXd extract_x() const
    {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(nv_);
        for (int i = 0; i < k_; ++i) {
            if (!row_active_[i]) continue;
            const int b = basis_[i];
            if (b < nv_) x[b] += T_(i, ncols_);
            else if (b < 2 * nv_) x[b - nv_] -= T_(i, ncols_);
        }
        return x;
    }

private:
    enum class Step { Optimal, Unbounded, Pivoted };

    bool is_artificial(int col) const { return col >= 2 * nv_ + k_; }

    void set_basis(int row, int col)
    {
        if (basis_[row] >= 0) is_basic_[basis_[row]] = false;
        basis_[row] = col;
        is_basic_[col] = true;
    }

    void pivot(int r, int c)
    {
        if (++pivots_ > max_pivots_) {
            throw SimplexSafeguardError("simplex: pivot safeguard tripped after " +
                                        std::to_string(pivots_) + " pivots");
        }
        const int old = basis_[r];
        T_.row(r) /= T_(r, c);
        for (int i = 0; i < k_ + 2; ++i) {
            if (i == r) continue;
            const double f = T_(i, c);
            if (f != 0.0) T_.row(i) -= f * T_.row(r);
        }
        set_basis(r, c);
        // artificials never come back once they leave the basis
        if (is_artificial(old)) col_banned_[old] = true;
    }

    Step step(int cost_row, bool phase1)
    {
        // Bland: smallest improving column index
        int enter = -1;
        for (int j = 0; j < ncols_; ++j) {
            if (is_basic_[j] || col_banned_[j]) continue;
            if (!phase1 && is_artificial(j)) continue;
            if (T_(cost_row, j) < -kPivotEps) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return Step::Optimal;

        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < k_; ++i) {
            if (!row_active_[i]) continue;
            const double a = T_(i, enter);
            if (a <= kPivotEps) continue;
            const double ratio = std::max(T_(i, ncols_), 0.0) / a;
            if (leave < 0 || ratio < best_ratio - 1e-12 ||
                (ratio < best_ratio + 1e-12 && basis_[i] < basis_[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) {
            unbounded_col_ = enter;
            return Step::Unbounded;
        }
        pivot(leave, enter);
        return Step::Pivoted;
    }

    void remove_artificials()
    {
        for (int i = 0; i < k_; ++i) {
            if (!row_active_[i] || !is_artificial(basis_[i])) continue;
            // pivot on the largest available coefficient to keep the basis well scaled
            int target = -1;
            double best = kPivotEps;
            for (int j = 0; j < 2 * nv_ + k_; ++j) {
                if (is_basic_[j]) continue;
                const double a = std::abs(T_(i, j));
                if (a > best) {
                    best = a;
                    target = j;
                }
            }
            if (target >= 0) {
                pivot(i, target);
            } else {
                row_active_[i] = false;  // redundant row: zero in every structural column
            }
        }
        for (int j = 2 * nv_ + k_; j < ncols_; ++j) col_banned_[j] = true;
    }

    Eigen::VectorXd extract_ray() const
    {
        Eigen::VectorXd d_std = Eigen::VectorXd::Zero(ncols_);
        d_std[unbounded_col_] = 1.0;
        for (int i = 0; i < k_; ++i) {
            if (row_active_[i]) d_std[basis_[i]] = -T_(i, unbounded_col_);
        }
        Eigen::VectorXd d = Eigen::VectorXd::Zero(nv_);
        for (int j = 0; j < nv_; ++j) d[j] = d_std[j] - d_std[nv_ + j];
        const double scale = d.cwiseAbs().maxCoeff();
        if (!(scale > 0.0)) {
            throw SimplexSafeguardError("simplex: unbounded ray vanished in decision space");
        }
        return d / scale;
    }

    int nv_;
    int k_;
    int n_art_ = 0;
    int ncols_ = 0;
    Eigen::MatrixXd T_;
    std::vector<int> basis_;
    std::vector<bool> is_basic_;
    std::vector<bool> row_active_;
    std::vector<bool> col_banned_;
    long pivots_ = 0;
    long max_pivots_ = 0;
    int unbounded_col_ = -1;
};

void require_lp_dims(const Eigen::MatrixXd& G, const Eigen::VectorXd& h)
{
    if (G.rows() != h.size()) throw std::invalid_argument("lp: G rows and h size disagree");
    if (G.cols() < 1) throw std::invalid_argument("lp: at least one variable required");
    if (!G.allFinite() || !h.allFinite()) throw std::invalid_argument("lp: non-finite data");
}

}  // namespace

LpProblem::LpProblem(Eigen::VectorXd c, Eigen::MatrixXd G_in, Eigen::VectorXd h_in)
    : objective(std::move(c)), G(std::move(G_in)), h(std::move(h_in))
{
    require_lp_dims(G, h);
    if (objective.size() != G.cols()) throw std::invalid_argument("lp: objective size and G cols disagree");
    if (!objective.allFinite()) throw std::invalid_argument("lp: non-finite objective");
}

SolveOutcome solve_lp(const LpProblem& lp, const Tolerances& tol)
{
    SimplexTableau tableau(lp.objective, lp.G, lp.h);
    if (!tableau.run_phase1(tol.feasibility_eps)) return SolveOutcome::infeasible();
    return tableau.run_phase2();
}

bool lp_feasible(const Eigen::MatrixXd& G, const Eigen::VectorXd& h, const Tolerances& tol)
{
    require_lp_dims(G, h);
    SimplexTableau tableau(Eigen::VectorXd::Zero(G.cols()), G, h);
    return tableau.run_phase1(tol.feasibility_eps);
}

std::optional<Eigen::VectorXd> lp_feasible_point(const Eigen::MatrixXd& G, const Eigen::VectorXd& h,
                                                 const Tolerances& tol)
{
    require_lp_dims(G, h);
    SimplexTableau tableau(Eigen::VectorXd::Zero(G.cols()), G, h);
    if (!tableau.run_phase1(tol.feasibility_eps)) return std::nullopt;
    return tableau.extract_x();
}

}  // namespace paramvex
