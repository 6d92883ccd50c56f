#include "paramvex/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace paramvex {

Ball::Ball(Eigen::VectorXd c, double r) : center(std::move(c)), radius(r)
{
    if (!(radius > 0.0)) throw std::invalid_argument("Ball: radius must be positive");
    if (!center.allFinite()) throw std::invalid_argument("Ball: center must be finite");
}

Box::Box(Eigen::VectorXd lo, Eigen::VectorXd hi) : lower(std::move(lo)), upper(std::move(hi))
{
    if (lower.size() != upper.size()) throw std::invalid_argument("Box: dimension mismatch");
    if (lower.size() == 0) throw std::invalid_argument("Box: dimension must be >= 1");
    if (!lower.allFinite() || !upper.allFinite()) throw std::invalid_argument("Box: bounds must be finite");
    for (int i = 0; i < lower.size(); ++i) {
        if (lower[i] > upper[i]) throw std::invalid_argument("Box: lower must be <= upper componentwise");
    }
}

Box Box::interval(double lo, double hi)
{
    Eigen::VectorXd l(1), u(1);
    l << lo;
    u << hi;
    return Box(std::move(l), std::move(u));
}

bool Box::contains(const Eigen::VectorXd& y, double pad) const
{
    if (y.size() != lower.size()) return false;
    for (int i = 0; i < y.size(); ++i) {
        if (y[i] < lower[i] - pad || y[i] > upper[i] + pad) return false;
    }
    return true;
}

std::uint64_t Rng::next_u64()
{
    // splitmix64
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Rng::uniform01()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform01();
}

double Rng::gaussian()
{
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag)
{
    // FNV-1a over the tag, then one splitmix64 scramble of the pair.
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    Rng mixer(base ^ h);
    return mixer.next_u64();
}

std::vector<Eigen::VectorXd> sample_ball(const Ball& ball, int count, std::uint64_t seed)
{
    if (count < 1) throw std::invalid_argument("sample_ball: count must be >= 1");
    const int m = ball.dim();
    Rng rng(seed);
    std::vector<Eigen::VectorXd> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        Eigen::VectorXd dir(m);
        double norm = 0.0;
        do {
            for (int i = 0; i < m; ++i) dir[i] = rng.gaussian();
            norm = dir.norm();
        } while (norm < 1e-12);
        // u in [0,1) makes the radius factor strictly less than ball.radius
        const double r = ball.radius * std::pow(rng.uniform01(), 1.0 / m);
        out.push_back(ball.center + (r / norm) * dir);
    }
    return out;
}

std::vector<Eigen::VectorXd> sample_box(const Box& box, int count, std::uint64_t seed)
{
    if (count < 1) throw std::invalid_argument("sample_box: count must be >= 1");
    Rng rng(seed);
    std::vector<Eigen::VectorXd> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        Eigen::VectorXd y(box.dim());
        for (int i = 0; i < box.dim(); ++i) y[i] = rng.uniform(box.lower[i], box.upper[i]);
        out.push_back(std::move(y));
    }
    return out;
}

std::vector<Eigen::VectorXd> grid_points(const Box& box, int points_per_dim)
{
    if (points_per_dim < 2) throw std::invalid_argument("grid_points: need >= 2 points per dimension");
    const int m = box.dim();
    std::size_t total = 1;
    for (int i = 0; i < m; ++i) total *= static_cast<std::size_t>(points_per_dim);

    std::vector<Eigen::VectorXd> out;
    out.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        Eigen::VectorXd y(m);
        std::size_t rest = idx;
        for (int d = m - 1; d >= 0; --d) {
            const std::size_t i = rest % static_cast<std::size_t>(points_per_dim);
            rest /= static_cast<std::size_t>(points_per_dim);
            y[d] = box.lower[d] +
                   static_cast<double>(i) * (box.upper[d] - box.lower[d]) / (points_per_dim - 1);
        }
        out.push_back(std::move(y));
    }
    return out;
}

}  // namespace paramvex
