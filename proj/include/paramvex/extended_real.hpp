#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "paramvex/tolerances.hpp"

namespace paramvex {

/**
 * A real number extended with explicit +inf / -inf states.
 *
 * The infinities encode problem status (empty feasible set, missing
 * minimum), not arithmetic overflow: a Finite value always carries a
 * finite, non-NaN double, and constructing one from NaN or an IEEE
 * infinity throws. The order is total: -inf < every finite < +inf.
 */
class ExtendedReal {
public:
    enum class Kind { Finite, PlusInfinity, MinusInfinity };

    ExtendedReal() : kind_(Kind::Finite), value_(0.0) {}

    static ExtendedReal finite(double v)
    {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("ExtendedReal::finite: non-finite payload " + std::to_string(v));
        }
        return ExtendedReal(Kind::Finite, v);
    }
    static ExtendedReal plus_infinity() { return ExtendedReal(Kind::PlusInfinity, 0.0); }
    static ExtendedReal minus_infinity() { return ExtendedReal(Kind::MinusInfinity, 0.0); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_plus_infinity() const { return kind_ == Kind::PlusInfinity; }
    bool is_minus_infinity() const { return kind_ == Kind::MinusInfinity; }

    /// Finite payload; throws std::logic_error on an infinite value.
    double value() const
    {
        if (kind_ != Kind::Finite) {
            throw std::logic_error("ExtendedReal::value: value is infinite");
        }
        return value_;
    }

    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b)
    {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtendedReal& a, const ExtendedReal& b) { return !(a == b); }
    friend bool operator<(const ExtendedReal& a, const ExtendedReal& b)
    {
        if (a.rank() != b.rank()) return a.rank() < b.rank();
        return a.kind_ == Kind::Finite && a.value_ < b.value_;
    }
    friend bool operator>(const ExtendedReal& a, const ExtendedReal& b) { return b < a; }
    friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) { return !(b < a); }
    friend bool operator>=(const ExtendedReal& a, const ExtendedReal& b) { return !(a < b); }

    std::string to_string() const
    {
        switch (kind_) {
        case Kind::PlusInfinity: return "+inf";
        case Kind::MinusInfinity: return "-inf";
        default: return std::to_string(value_);
        }
    }

private:
    ExtendedReal(Kind k, double v) : kind_(k), value_(v) {}

    int rank() const
    {
        switch (kind_) {
        case Kind::MinusInfinity: return -1;
        case Kind::Finite: return 0;
        default: return 1;
        }
    }

    Kind kind_;
    double value_;
};

enum class Ordering { Less, Equal, Greater };

/// Smaller of the two under the total order.
inline ExtendedReal ext_min(const ExtendedReal& a, const ExtendedReal& b)
{
    return b < a ? b : a;
}

/**
 * Three-way comparison. Finite-finite comparisons treat values within
 * tol.value_eps of each other as equal; infinities compare exactly.
 */
inline Ordering ext_compare(const ExtendedReal& a, const ExtendedReal& b, const Tolerances& tol)
{
    if (a.is_finite() && b.is_finite()) {
        const double d = a.value() - b.value();
        if (std::abs(d) <= tol.value_eps) return Ordering::Equal;
        return d < 0 ? Ordering::Less : Ordering::Greater;
    }
    if (a == b) return Ordering::Equal;
    return a < b ? Ordering::Less : Ordering::Greater;
}

}  // namespace paramvex
