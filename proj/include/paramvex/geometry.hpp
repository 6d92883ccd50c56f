#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace paramvex {

/// Open Euclidean ball in parameter space; the concrete "neighbourhood of y0".
struct Ball {
    Eigen::VectorXd center;
    double radius = 0.0;

    Ball(Eigen::VectorXd c, double r);
    int dim() const { return static_cast<int>(center.size()); }
    bool contains(const Eigen::VectorXd& y) const { return (y - center).norm() < radius; }
};

/// Axis-aligned box; the concrete open convex analysis region.
struct Box {
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;

    Box(Eigen::VectorXd lo, Eigen::VectorXd hi);
    static Box interval(double lo, double hi);

    int dim() const { return static_cast<int>(lower.size()); }
    bool contains(const Eigen::VectorXd& y, double pad = 0.0) const;
    Eigen::VectorXd midpoint() const { return 0.5 * (lower + upper); }
};

/**
 * Deterministic, platform-independent random stream (splitmix64).
 * Stream contents depend only on the seed, never on the standard
 * library's distribution implementations.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform01();  // [0, 1)
    double uniform(double lo, double hi);
    double gaussian();

private:
    std::uint64_t state_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

/// Mix a base seed with a tag so every checker draws from its own stream.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag);

/// `count` points strictly inside the ball; identical output for identical seeds.
std::vector<Eigen::VectorXd> sample_ball(const Ball& ball, int count, std::uint64_t seed);

/// `count` points uniform in the box; identical output for identical seeds.
std::vector<Eigen::VectorXd> sample_box(const Box& box, int count, std::uint64_t seed);

/// Inclusive per-dimension linspace grid, last dimension varying fastest.
std::vector<Eigen::VectorXd> grid_points(const Box& box, int points_per_dim);

}  // namespace paramvex
