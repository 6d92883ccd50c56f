#pragma once

#include <stdexcept>

namespace paramvex {

/**
 * Numerical tolerance policy shared by all kernels and checkers.
 *
 * The defaults widen by one order of magnitude per compositional layer:
 * raw constraint residuals (feasibility_eps), solver cost comparisons
 * (value_eps), and sampled convexity checks that stack solver noise
 * (convexity_eps). unbounded_threshold is the magnitude beyond which a
 * descent ray is declared.
 */
struct Tolerances {
    double feasibility_eps = 1e-8;
    double value_eps = 1e-7;
    double convexity_eps = 1e-6;
    double unbounded_threshold = 1e10;

    /// Validating factory. All fields strictly positive, value_eps <= convexity_eps.
    static Tolerances make(double feasibility, double value, double convexity, double unbounded)
    {
        Tolerances t{feasibility, value, convexity, unbounded};
        t.validate();
        return t;
    }

    void validate() const
    {
        if (!(feasibility_eps > 0.0) || !(value_eps > 0.0) || !(convexity_eps > 0.0) ||
            !(unbounded_threshold > 0.0)) {
            throw std::invalid_argument("Tolerances: all fields must be strictly positive");
        }
        if (value_eps > convexity_eps) {
            throw std::invalid_argument("Tolerances: value_eps must not exceed convexity_eps");
        }
    }

    /// Copy with value_eps scaled (used where checks allow k * value_eps slack).
    Tolerances with_value_eps(double eps) const
    {
        Tolerances t = *this;
        t.value_eps = eps;
        if (t.convexity_eps < eps) t.convexity_eps = eps;
        return t;
    }
};

}  // namespace paramvex
