#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "paramvex/extended_real.hpp"

namespace paramvex {

/// One affine piece p.x + q.y + r of a max-of-affine cost.
struct AffinePiece {
    Eigen::VectorXd p;
    Eigen::VectorXd q;
    double r = 0.0;
};

enum class BuiltinKind {
    ExpNeg,        // phi(x, y) = exp(-x), decision-only, infimum 0 never attained on rays
    AbsDeviation,  // phi(x, y) = |x - y|
};

std::string builtin_name(BuiltinKind kind);
BuiltinKind builtin_from_name(const std::string& name);

/**
 * Cost specification phi(x, y), jointly convex in (x, y) by construction.
 *
 * Three certifiably convex classes are supported: max of affine pieces,
 * positive semidefinite quadratics in the stacked vector (x, y), and a
 * small catalog of closed-form 1-D builtins that supply pathologies the
 * first two classes cannot (a finite infimum that is never attained).
 */
class CostSpec {
public:
    enum class Kind { AffineMax, Quadratic, Builtin };

    static CostSpec affine_max(std::vector<AffinePiece> pieces, int n, int m);

    /// Q is symmetrized and must be PSD up to an eigenvalue floor of -1e-10;
    /// slightly negative eigenvalues are clipped to zero.
    static CostSpec quadratic(const Eigen::MatrixXd& Q, Eigen::VectorXd g, double h, int n, int m);

    static CostSpec builtin(BuiltinKind kind, int m);

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    int m() const { return m_; }

    double evaluate(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

    const std::vector<AffinePiece>& pieces() const { return pieces_; }
    const Eigen::MatrixXd& quadratic_matrix() const { return Q_; }
    const Eigen::VectorXd& linear_term() const { return g_; }
    double constant_term() const { return h_; }
    BuiltinKind builtin_kind() const { return builtin_; }

    /// Gradient of phi(., y) at x. AffineMax uses the active piece's subgradient.
    Eigen::VectorXd gradient_x(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

    /// Limit of the builtin along x -> +inf (plus_direction) or x -> -inf.
    ExtendedReal builtin_limit(bool plus_direction, const Eigen::VectorXd& y) const;

private:
    CostSpec(Kind kind, int n, int m) : kind_(kind), n_(n), m_(m) {}
    void require_dims(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

    Kind kind_;
    int n_;
    int m_;
    std::vector<AffinePiece> pieces_;
    Eigen::MatrixXd Q_;
    Eigen::VectorXd g_;
    double h_ = 0.0;
    BuiltinKind builtin_ = BuiltinKind::ExpNeg;
};

}  // namespace paramvex
