#include "paramvex/cost.hpp"

#include <cmath>
#include <stdexcept>

namespace paramvex {

namespace {
constexpr double kPsdEigenFloor = -1e-10;
}

std::string builtin_name(BuiltinKind kind)
{
    switch (kind) {
    case BuiltinKind::ExpNeg: return "exp_neg";
    case BuiltinKind::AbsDeviation: return "abs_dev";
    }
    throw std::logic_error("builtin_name: unknown kind");
}

BuiltinKind builtin_from_name(const std::string& name)
{
    if (name == "exp_neg") return BuiltinKind::ExpNeg;
    if (name == "abs_dev") return BuiltinKind::AbsDeviation;
    throw std::invalid_argument("unknown builtin cost '" + name + "'");
}

CostSpec CostSpec::affine_max(std::vector<AffinePiece> pieces, int n, int m)
{
    if (n < 1 || m < 1) throw std::invalid_argument("CostSpec: n, m must be >= 1");
    if (pieces.empty()) throw std::invalid_argument("CostSpec: affine_max needs at least one piece");
    for (const auto& piece : pieces) {
        if (piece.p.size() != n || piece.q.size() != m) {
            throw std::invalid_argument("CostSpec: affine piece dimension mismatch");
        }
        if (!piece.p.allFinite() || !piece.q.allFinite() || !std::isfinite(piece.r)) {
            throw std::invalid_argument("CostSpec: affine piece has non-finite coefficients");
        }
    }
    CostSpec c(Kind::AffineMax, n, m);
    c.pieces_ = std::move(pieces);
    return c;
}

CostSpec CostSpec::quadratic(const Eigen::MatrixXd& Q, Eigen::VectorXd g, double h, int n, int m)
{
    if (n < 1 || m < 1) throw std::invalid_argument("CostSpec: n, m must be >= 1");
    const int d = n + m;
    if (Q.rows() != d || Q.cols() != d || g.size() != d) {
        throw std::invalid_argument("CostSpec: quadratic dimension mismatch");
    }
    if (!Q.allFinite() || !g.allFinite() || !std::isfinite(h)) {
        throw std::invalid_argument("CostSpec: quadratic has non-finite coefficients");
    }

    Eigen::MatrixXd sym = 0.5 * (Q + Q.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
    if (eig.info() != Eigen::Success) throw std::runtime_error("CostSpec: eigendecomposition failed");
    Eigen::VectorXd lambda = eig.eigenvalues();
    if (lambda.minCoeff() < kPsdEigenFloor) {
        throw std::invalid_argument("CostSpec: quadratic matrix is not positive semidefinite (min eigenvalue " +
                                    std::to_string(lambda.minCoeff()) + ")");
    }
    // Clip the floating-point dust so phi is PSD exactly as stored.
    for (int i = 0; i < lambda.size(); ++i) lambda[i] = std::max(lambda[i], 0.0);

    CostSpec c(Kind::Quadratic, n, m);
    c.Q_ = eig.eigenvectors() * lambda.asDiagonal() * eig.eigenvectors().transpose();
    c.g_ = std::move(g);
    c.h_ = h;
    return c;
}

CostSpec CostSpec::builtin(BuiltinKind kind, int m)
{
    if (m < 1) throw std::invalid_argument("CostSpec: m must be >= 1");
    CostSpec c(Kind::Builtin, 1, m);
    c.builtin_ = kind;
    return c;
}

void CostSpec::require_dims(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const
{
    if (x.size() != n_ || y.size() != m_) {
        throw std::invalid_argument("CostSpec: argument dimension mismatch (got x:" +
                                    std::to_string(x.size()) + " y:" + std::to_string(y.size()) +
                                    ", expected x:" + std::to_string(n_) + " y:" + std::to_string(m_) + ")");
    }
    if (!x.allFinite() || !y.allFinite()) {
        throw std::invalid_argument("CostSpec: arguments must be finite");
    }
}

double CostSpec::evaluate(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const
{
    require_dims(x, y);
    switch (kind_) {
    case Kind::AffineMax: {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& piece : pieces_) {
            best = std::max(best, piece.p.dot(x) + piece.q.dot(y) + piece.r);
        }
        return best;
    }
    case Kind::Quadratic: {
        Eigen::VectorXd z(n_ + m_);
        z << x, y;
        return 0.5 * z.dot(Q_ * z) + g_.dot(z) + h_;
    }
    case Kind::Builtin:
        switch (builtin_) {
        case BuiltinKind::ExpNeg: return std::exp(-x[0]);
        case BuiltinKind::AbsDeviation: return std::abs(x[0] - y[0]);
        }
    }
    throw std::logic_error("CostSpec::evaluate: unknown kind");
}

Eigen::VectorXd CostSpec::gradient_x(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const
{
    require_dims(x, y);
    switch (kind_) {
    case Kind::AffineMax: {
        int best = 0;
        double best_val = pieces_[0].p.dot(x) + pieces_[0].q.dot(y) + pieces_[0].r;
        for (int i = 1; i < static_cast<int>(pieces_.size()); ++i) {
            const double v = pieces_[i].p.dot(x) + pieces_[i].q.dot(y) + pieces_[i].r;
            if (v > best_val) {
                best_val = v;
                best = i;
            }
        }
        return pieces_[best].p;
    }
    case Kind::Quadratic: {
        Eigen::VectorXd z(n_ + m_);
        z << x, y;
        const Eigen::VectorXd full = Q_ * z + g_;
        return full.head(n_);
    }
    case Kind::Builtin: {
        Eigen::VectorXd g(1);
        switch (builtin_) {
        case BuiltinKind::ExpNeg: g[0] = -std::exp(-x[0]); return g;
        case BuiltinKind::AbsDeviation: g[0] = x[0] >= y[0] ? 1.0 : -1.0; return g;
        }
    }
    }
    throw std::logic_error("CostSpec::gradient_x: unknown kind");
}

ExtendedReal CostSpec::builtin_limit(bool plus_direction, const Eigen::VectorXd& y) const
{
    if (kind_ != Kind::Builtin) throw std::logic_error("CostSpec::builtin_limit: not a builtin cost");
    (void)y;
    switch (builtin_) {
    case BuiltinKind::ExpNeg:
        return plus_direction ? ExtendedReal::finite(0.0) : ExtendedReal::plus_infinity();
    case BuiltinKind::AbsDeviation:
        return ExtendedReal::plus_infinity();
    }
    throw std::logic_error("CostSpec::builtin_limit: unknown builtin");
}

}  // namespace paramvex
