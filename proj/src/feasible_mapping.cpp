#include "paramvex/feasible_mapping.hpp"

#include <stdexcept>
#include <string>

namespace paramvex {

FeasibleMapping::FeasibleMapping(Eigen::MatrixXd A, Eigen::MatrixXd B, Eigen::VectorXd c)
    : A_(std::move(A)), B_(std::move(B)), c_(std::move(c))
{
    if (A_.cols() < 1 || B_.cols() < 1) {
        throw std::invalid_argument("FeasibleMapping: decision and parameter dimensions must be >= 1");
    }
    if (A_.rows() != B_.rows() || A_.rows() != c_.size()) {
        throw std::invalid_argument("FeasibleMapping: row count mismatch (A:" + std::to_string(A_.rows()) +
                                    " B:" + std::to_string(B_.rows()) + " c:" + std::to_string(c_.size()) + ")");
    }
    if (!A_.allFinite() || !B_.allFinite() || !c_.allFinite()) {
        throw std::invalid_argument("FeasibleMapping: coefficients must be finite");
    }
}

FeasibleMapping FeasibleMapping::unconstrained(int n, int m)
{
    return FeasibleMapping(Eigen::MatrixXd(0, n), Eigen::MatrixXd(0, m), Eigen::VectorXd(0));
}

Eigen::VectorXd FeasibleMapping::rhs_at(const Eigen::VectorXd& y) const
{
    if (y.size() != m()) throw std::invalid_argument("FeasibleMapping: parameter dimension mismatch");
    return c_ + B_ * y;
}

bool FeasibleMapping::contains(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                               double feasibility_eps) const
{
    if (x.size() != n()) throw std::invalid_argument("FeasibleMapping: decision dimension mismatch");
    if (rows() == 0) {
        rhs_at(y);  // still validates the parameter dimension
        return true;
    }
    const Eigen::VectorXd residual = A_ * x - rhs_at(y);
    return residual.maxCoeff() <= feasibility_eps;
}

}  // namespace paramvex
