#pragma once

#include <Eigen/Dense>

namespace paramvex {

/**
 * Parametric polyhedral feasible mapping F(y) = { x | A x <= c + B y }.
 *
 * The graph { (x, y) | A x - B y <= c } is a closed convex polyhedron by
 * construction, which is the standing assumption every downstream check
 * relies on. Zero rows (unconstrained decision space) are allowed.
 */
class FeasibleMapping {
public:
    FeasibleMapping(Eigen::MatrixXd A, Eigen::MatrixXd B, Eigen::VectorXd c);

    /// Unconstrained mapping F(y) = R^n.
    static FeasibleMapping unconstrained(int n, int m);

    int rows() const { return static_cast<int>(A_.rows()); }
    int n() const { return static_cast<int>(A_.cols()); }
    int m() const { return static_cast<int>(B_.cols()); }

    const Eigen::MatrixXd& A() const { return A_; }
    const Eigen::MatrixXd& B() const { return B_; }
    const Eigen::VectorXd& c() const { return c_; }

    /// Right-hand side c + B y of the inequality system at parameter y.
    Eigen::VectorXd rhs_at(const Eigen::VectorXd& y) const;

    /// Componentwise A x - B y - c <= feasibility_eps.
    bool contains(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double feasibility_eps) const;

private:
    Eigen::MatrixXd A_;
    Eigen::MatrixXd B_;
    Eigen::VectorXd c_;
};

}  // namespace paramvex
