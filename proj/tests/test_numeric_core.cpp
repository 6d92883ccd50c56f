#include "doctest.h"

#include <algorithm>
#include <vector>

#include "paramvex/extended_real.hpp"
#include "paramvex/geometry.hpp"
#include "paramvex/tolerances.hpp"

using namespace paramvex;

namespace {
ExtendedReal fin(double v) { return ExtendedReal::finite(v); }
}  // namespace

TEST_CASE("ext_min picks the smaller value under the total order")
{
    CHECK(ext_min(fin(2.0), fin(3.0)) == fin(2.0));
    CHECK(ext_min(ExtendedReal::minus_infinity(), fin(0.0)) == ExtendedReal::minus_infinity());
    CHECK(ext_min(ExtendedReal::plus_infinity(), ExtendedReal::plus_infinity()) ==
          ExtendedReal::plus_infinity());
}

TEST_CASE("ext_compare uses the value_eps band for finite pairs and exact order for infinities")
{
    Tolerances tol;
    tol.value_eps = 1e-9;
    CHECK(ext_compare(fin(1.0), fin(1.0 + 1e-12), tol) == Ordering::Equal);
    CHECK(ext_compare(ExtendedReal::minus_infinity(), fin(-1e300), tol) == Ordering::Less);
    CHECK(ext_compare(fin(0.0), ExtendedReal::plus_infinity(), tol) == Ordering::Less);
}

TEST_CASE("trichotomy: exactly one of less/equal/greater at vanishing tolerance")
{
    const Tolerances tiny = Tolerances::make(1e-300, 1e-300, 1e-300, 1e10);
    Rng rng(99);
    std::vector<ExtendedReal> pool = {ExtendedReal::plus_infinity(), ExtendedReal::minus_infinity()};
    for (int i = 0; i < 40; ++i) pool.push_back(fin(rng.uniform(-5.0, 5.0)));
    for (const auto& a : pool) {
        for (const auto& b : pool) {
            int hits = 0;
            if (ext_compare(a, b, tiny) == Ordering::Less) ++hits;
            if (ext_compare(a, b, tiny) == Ordering::Equal) ++hits;
            if (ext_compare(a, b, tiny) == Ordering::Greater) ++hits;
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("ext_min is associative and commutative over finite lists")
{
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<ExtendedReal> xs;
        const int len = 2 + static_cast<int>(rng.uniform01() * 8);
        for (int i = 0; i < len; ++i) {
            const double u = rng.uniform01();
            if (u < 0.1) xs.push_back(ExtendedReal::plus_infinity());
            else if (u < 0.2) xs.push_back(ExtendedReal::minus_infinity());
            else xs.push_back(fin(rng.uniform(-10.0, 10.0)));
        }
        ExtendedReal left = xs.front();
        for (std::size_t i = 1; i < xs.size(); ++i) left = ext_min(left, xs[i]);
        ExtendedReal right = xs.back();
        for (std::size_t i = xs.size() - 1; i-- > 0;) right = ext_min(xs[i], right);
        CHECK(left == right);

        std::vector<ExtendedReal> shuffled = xs;
        std::reverse(shuffled.begin(), shuffled.end());
        ExtendedReal rev = shuffled.front();
        for (std::size_t i = 1; i < shuffled.size(); ++i) rev = ext_min(rev, shuffled[i]);
        CHECK(left == rev);
    }
}

TEST_CASE("infinities are explicit states; IEEE specials are hard errors")
{
    CHECK_THROWS_AS(ExtendedReal::finite(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(ExtendedReal::finite(std::numeric_limits<double>::infinity()), std::invalid_argument);
    CHECK_THROWS_AS(ExtendedReal::plus_infinity().value(), std::logic_error);
}

TEST_CASE("tolerance invariants are enforced by the factory")
{
    CHECK_THROWS_AS(Tolerances::make(0.0, 1e-7, 1e-6, 1e10), std::invalid_argument);
    CHECK_THROWS_AS(Tolerances::make(1e-8, -1e-7, 1e-6, 1e10), std::invalid_argument);
    CHECK_THROWS_AS(Tolerances::make(1e-8, 1e-5, 1e-6, 1e10), std::invalid_argument);
    CHECK_NOTHROW(Tolerances::make(1e-8, 1e-7, 1e-6, 1e10));
}

TEST_CASE("sample_ball: strict containment and determinism on the stated examples")
{
    Eigen::VectorXd c1(1);
    c1 << 0.0;
    const auto pts = sample_ball(Ball(c1, 1.0), 3, 7);
    REQUIRE(pts.size() == 3);
    for (const auto& y : pts) CHECK(y.norm() < 1.0);

    Eigen::VectorXd c2(2);
    c2 << 0.0, 0.0;
    const auto pts2 = sample_ball(Ball(c2, 0.5), 100, 1);
    REQUIRE(pts2.size() == 100);
    for (const auto& y : pts2) CHECK(y.norm() < 0.5);

    const auto again = sample_ball(Ball(c2, 0.5), 100, 1);
    for (std::size_t i = 0; i < pts2.size(); ++i) CHECK(pts2[i] == again[i]);
}

TEST_CASE("sample_ball containment and determinism hold for random seeds, counts, dimensions")
{
    Rng meta(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const int dim = 1 + static_cast<int>(meta.uniform01() * 6);
        const int count = 1 + static_cast<int>(meta.uniform01() * 40);
        const std::uint64_t seed = meta.next_u64();
        Eigen::VectorXd center(dim);
        for (int i = 0; i < dim; ++i) center[i] = meta.uniform(-3.0, 3.0);
        const double radius = meta.uniform(0.05, 2.0);
        const Ball ball(center, radius);

        const auto a = sample_ball(ball, count, seed);
        const auto b = sample_ball(ball, count, seed);
        REQUIRE(a.size() == static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            CHECK((a[i] - center).norm() < radius);
            CHECK(a[i] == b[i]);
        }
    }
}

TEST_CASE("geometry constructors reject degenerate inputs")
{
    Eigen::VectorXd c(1);
    c << 0.0;
    CHECK_THROWS_AS(Ball(c, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Ball(c, -1.0), std::invalid_argument);
    Eigen::VectorXd lo(2), hi(2);
    lo << 0.0, 1.0;
    hi << 1.0, 0.0;
    CHECK_THROWS_AS(Box(lo, hi), std::invalid_argument);
}

TEST_CASE("grid_points: inclusive endpoints, full product count, last dimension fastest")
{
    Eigen::VectorXd lo(2), hi(2);
    lo << -1.0, 0.0;
    hi << 1.0, 2.0;
    const auto pts = grid_points(Box(lo, hi), 3);
    REQUIRE(pts.size() == 9);
    CHECK(pts.front()[0] == -1.0);
    CHECK(pts.front()[1] == 0.0);
    CHECK(pts.back()[0] == 1.0);
    CHECK(pts.back()[1] == 2.0);
    CHECK(pts[1][0] == -1.0);  // second point advances the last dimension
    CHECK(pts[1][1] == 1.0);
    CHECK_THROWS_AS(grid_points(Box(lo, hi), 1), std::invalid_argument);
}

TEST_CASE("derive_seed separates streams by tag")
{
    CHECK(derive_seed(42, "a") != derive_seed(42, "b"));
    CHECK(derive_seed(42, "a") == derive_seed(42, "a"));
    CHECK(derive_seed(42, "a") != derive_seed(43, "a"));
}
