#include "doctest.h"

#include "oracles.hpp"
#include "paramvex/builtin_solver.hpp"
#include "paramvex/catalog.hpp"
#include "paramvex/lp.hpp"
#include "paramvex/qp.hpp"

using namespace paramvex;
using namespace paramvex_test;

namespace {

Eigen::VectorXd vec1(double v)
{
    Eigen::VectorXd x(1);
    x << v;
    return x;
}

const Tolerances kTol{};

void check_unbounded_certificate(const RandomLp& lp, const SolveOutcome& out)
{
    REQUIRE(out.unbounded_ray.has_value());
    const Eigen::VectorXd& ray = *out.unbounded_ray;
    CHECK(ray.cwiseAbs().maxCoeff() == doctest::Approx(1.0));
    CHECK((lp.G * ray).maxCoeff() <= 1e-7);
    CHECK(lp.objective.dot(ray) < 0.0);
}

}  // namespace

TEST_CASE("solve_lp: the three status examples")
{
    SUBCASE("min x s.t. x >= 1")
    {
        LpProblem lp(vec1(1.0), -Eigen::MatrixXd::Ones(1, 1), vec1(-1.0));
        const SolveOutcome out = solve_lp(lp, kTol);
        REQUIRE(out.status == SolveStatus::Optimal);
        CHECK(out.value.value() == doctest::Approx(1.0));
        REQUIRE(out.minimizer.has_value());
        CHECK((*out.minimizer)[0] == doctest::Approx(1.0));
    }
    SUBCASE("min -x s.t. x >= 0 is unbounded with a certified ray")
    {
        LpProblem lp(vec1(-1.0), -Eigen::MatrixXd::Ones(1, 1), vec1(0.0));
        const SolveOutcome out = solve_lp(lp, kTol);
        REQUIRE(out.status == SolveStatus::Unbounded);
        CHECK(out.value.is_minus_infinity());
        REQUIRE(out.unbounded_ray.has_value());
        CHECK((*out.unbounded_ray)[0] == doctest::Approx(1.0));
    }
    SUBCASE("min x s.t. x <= 0, x >= 1 is infeasible")
    {
        Eigen::MatrixXd G(2, 1);
        G << 1.0, -1.0;
        Eigen::VectorXd h(2);
        h << 0.0, -1.0;
        const SolveOutcome out = solve_lp(LpProblem(vec1(1.0), G, h), kTol);
        CHECK(out.status == SolveStatus::Infeasible);
        CHECK(out.value.is_plus_infinity());
    }
}

TEST_CASE("solve_lp matches brute-force basic-feasible-solution enumeration on random bounded LPs")
{
    Rng rng(1234);
    int optimal_count = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const RandomLp lp = random_bounded_lp(rng, 4, 8, 10.0);
        const BfsOracleResult oracle = bfs_enumeration_min(lp.objective, lp.G, lp.h, 1e-9);
        const SolveOutcome out = solve_lp(LpProblem(lp.objective, lp.G, lp.h), kTol);

        if (oracle.feasible_vertex_found) {
            REQUIRE(out.status == SolveStatus::Optimal);
            CHECK(std::abs(out.value.value() - oracle.best_value) <= 1e-7);
            // optimality certificate: no enumerated vertex does better
            for (const double v : oracle.all_vertex_values) {
                CHECK(out.value.value() <= v + kTol.value_eps);
            }
            // feasibility certificate for the returned minimizer
            CHECK((lp.G * *out.minimizer - lp.h).maxCoeff() <= kTol.feasibility_eps);
            ++optimal_count;
        } else {
            CHECK(out.status == SolveStatus::Infeasible);
        }
    }
    CHECK(optimal_count > 20);  // the generator must actually exercise the optimal path
}

TEST_CASE("solve_lp certifies every unbounded verdict on free random LPs")
{
    Rng rng(777);
    int unbounded_count = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const RandomLp lp = random_free_lp(rng, 3, 5);
        const SolveOutcome out = solve_lp(LpProblem(lp.objective, lp.G, lp.h), kTol);
        if (out.status == SolveStatus::Unbounded) {
            check_unbounded_certificate(lp, out);
            ++unbounded_count;
        }
    }
    CHECK(unbounded_count > 10);
}

TEST_CASE("solve_lp is deterministic")
{
    Rng rng(55);
    const RandomLp lp = random_bounded_lp(rng, 3, 6, 5.0);
    const SolveOutcome a = solve_lp(LpProblem(lp.objective, lp.G, lp.h), kTol);
    const SolveOutcome b = solve_lp(LpProblem(lp.objective, lp.G, lp.h), kTol);
    REQUIRE(a.status == b.status);
    if (a.status == SolveStatus::Optimal) {
        CHECK(a.value.value() == b.value.value());
        CHECK(*a.minimizer == *b.minimizer);
    }
}

TEST_CASE("lp feasibility helpers agree with the full solve")
{
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const RandomLp lp = random_bounded_lp(rng, 3, 6, 5.0);
        const bool feasible = lp_feasible(lp.G, lp.h, kTol);
        const auto point = lp_feasible_point(lp.G, lp.h, kTol);
        CHECK(feasible == point.has_value());
        if (point) CHECK((lp.G * *point - lp.h).maxCoeff() <= kTol.feasibility_eps);
    }
}

TEST_CASE("solve_qp_projected on the catalog quadratics")
{
    const auto& proj = catalog_instance("P-PROJ").program;
    SUBCASE("P-PROJ at y=3: projection of 3 onto [-1,1] is 1")
    {
        const SolveOutcome out = solve_qp_projected(proj, vec1(3.0), kTol);
        REQUIRE(out.status == SolveStatus::Optimal);
        CHECK(out.value.value() == doctest::Approx(4.0).epsilon(1e-6));
        CHECK((*out.minimizer)[0] == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("P-PROJ at y=0: interior minimum")
    {
        const SolveOutcome out = solve_qp_projected(proj, vec1(0.0), kTol);
        REQUIRE(out.status == SolveStatus::Optimal);
        CHECK(std::abs(out.value.value()) <= 1e-9);
        CHECK(std::abs((*out.minimizer)[0]) <= 1e-6);
    }
    SUBCASE("P-RELU at y=0.5 against the dense grid oracle")
    {
        const auto& relu = catalog_instance("P-RELU").program;
        const double oracle =
            grid_min_1d([](double x) { return x * x; }, 0.5, 10.0, 1e-4);
        CHECK(oracle == doctest::Approx(0.25).epsilon(1e-6));  // frozen: minimum at the left endpoint
        const SolveOutcome out = solve_qp_projected(relu, vec1(0.5), kTol);
        REQUIRE(out.status == SolveStatus::Optimal);
        CHECK(out.value.value() == doctest::Approx(oracle).epsilon(1e-6));
        CHECK((*out.minimizer)[0] == doctest::Approx(0.5).epsilon(1e-6));
    }
}

TEST_CASE("solve_qp_projected rejects non-quadratic costs")
{
    const auto& lin = catalog_instance("P-LIN").program;
    CHECK_THROWS_AS(solve_qp_projected(lin, vec1(0.0), kTol), std::invalid_argument);
}

TEST_CASE("solve_qp_projected raises NoConvergence at a tiny iteration cap instead of guessing")
{
    const auto& proj = catalog_instance("P-PROJ").program;
    CHECK_THROWS_AS(solve_qp_projected(proj, vec1(3.0), kTol, QpOptions{.max_iterations = 1}),
                    NoConvergenceError);
}

TEST_CASE("solve_qp_projected declares unboundedness along a flat feasible descent direction")
{
    // phi(x, y) = x1^2 - x2 over { x1 >= 0 }: flat, decreasing along +x2
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(3, 3);
    Q(0, 0) = 2.0;
    Eigen::VectorXd g(3);
    g << 0.0, -1.0, 0.0;
    auto cost = CostSpec::quadratic(Q, g, 0.0, 2, 1);
    Eigen::MatrixXd A(1, 2);
    A << -1.0, 0.0;
    FeasibleMapping F(A, Eigen::MatrixXd::Zero(1, 1), Eigen::VectorXd::Zero(1));
    const ParametricProgram p(std::move(cost), std::move(F));

    const SolveOutcome out = solve_qp_projected(p, vec1(0.0), kTol);
    CHECK(out.status == SolveStatus::Unbounded);
    CHECK(out.value.is_minus_infinity());
}

TEST_CASE("QP stationarity: random PSD quadratics over boxes pass the directional-derivative test")
{
    Rng rng(424242);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform01() * 3);
        const int m = 1;
        // PSD Q from a random square root, acting on (x, y)
        Eigen::MatrixXd root(n + m, n + m);
        for (int i = 0; i < root.size(); ++i) root(i / (n + m), i % (n + m)) = rng.uniform(-1.0, 1.0);
        Eigen::MatrixXd Q = root.transpose() * root + 0.05 * Eigen::MatrixXd::Identity(n + m, n + m);
        Eigen::VectorXd g(n + m);
        for (int i = 0; i < n + m; ++i) g[i] = rng.uniform(-1.0, 1.0);
        auto cost = CostSpec::quadratic(Q, g, 0.0, n, m);

        Eigen::MatrixXd A(2 * n, n);
        A.setZero();
        Eigen::VectorXd c(2 * n);
        for (int j = 0; j < n; ++j) {
            A(2 * j, j) = 1.0;
            c[2 * j] = rng.uniform(0.5, 3.0);
            A(2 * j + 1, j) = -1.0;
            c[2 * j + 1] = rng.uniform(0.5, 3.0);
        }
        const ParametricProgram p(std::move(cost),
                                  FeasibleMapping(A, Eigen::MatrixXd::Zero(2 * n, m), c));

        const Eigen::VectorXd y = vec1(rng.uniform(-1.0, 1.0));
        const SolveOutcome out = solve_qp_projected(p, y, kTol);
        REQUIRE(out.status == SolveStatus::Optimal);
        const Eigen::VectorXd x_star = *out.minimizer;
        CHECK(p.feasible().contains(x_star, y, kTol.feasibility_eps));

        const Eigen::VectorXd grad = p.cost().gradient_x(x_star, y);
        for (int probe = 0; probe < 20; ++probe) {
            Eigen::VectorXd z(n);
            for (int j = 0; j < n; ++j) z[j] = rng.uniform(-c[2 * j + 1], c[2 * j]);
            const Eigen::VectorXd dir = z - x_star;
            const double len = dir.norm();
            if (len < 1e-9) continue;
            CHECK(grad.dot(dir) / len >= -10.0 * kTol.value_eps);
        }
    }
}

TEST_CASE("solve_builtin_1d on the catalog builtin and its variants")
{
    const auto& exp = catalog_instance("P-EXP").program;
    SUBCASE("P-EXP at y=0: infimum 0 never attained, -inf by convention")
    {
        const SolveOutcome out = solve_builtin_1d(exp, vec1(0.0), kTol);
        REQUIRE(out.status == SolveStatus::InfNotAttained);
        CHECK(out.value.is_minus_infinity());
        REQUIRE(out.infimum_hint.has_value());
        CHECK(*out.infimum_hint == doctest::Approx(0.0));
    }
    SUBCASE("exp(-x) over the compact interval [0, 5] attains its minimum at 5")
    {
        Eigen::MatrixXd A(2, 1);
        A << -1.0, 1.0;
        Eigen::VectorXd c(2);
        c << 0.0, 5.0;
        const ParametricProgram variant(CostSpec::builtin(BuiltinKind::ExpNeg, 1),
                                        FeasibleMapping(A, Eigen::MatrixXd::Zero(2, 1), c));
        const SolveOutcome out = solve_builtin_1d(variant, vec1(0.0), kTol);
        REQUIRE(out.status == SolveStatus::Optimal);
        CHECK(out.value.value() == doctest::Approx(std::exp(-5.0)).epsilon(1e-9));
        CHECK((*out.minimizer)[0] == doctest::Approx(5.0).epsilon(1e-9));
    }
    SUBCASE("|x - y| over the whole line has its kink minimum at y")
    {
        const ParametricProgram free_abs(CostSpec::builtin(BuiltinKind::AbsDeviation, 1),
                                         FeasibleMapping::unconstrained(1, 1));
        const SolveOutcome out = solve_builtin_1d(free_abs, vec1(2.0), kTol);
        REQUIRE(out.status == SolveStatus::Optimal);
        CHECK(std::abs(out.value.value()) <= 1e-9);
        CHECK((*out.minimizer)[0] == doctest::Approx(2.0).epsilon(1e-6));
    }
    SUBCASE("left ray: |x - y| over x <= 0 at y=2 sits at the endpoint")
    {
        Eigen::MatrixXd A(1, 1);
        A << 1.0;
        const ParametricProgram p(CostSpec::builtin(BuiltinKind::AbsDeviation, 1),
                                  FeasibleMapping(A, Eigen::MatrixXd::Zero(1, 1),
                                                  Eigen::VectorXd::Zero(1)));
        const SolveOutcome out = solve_builtin_1d(p, vec1(2.0), kTol);
        REQUIRE(out.status == SolveStatus::Optimal);
        CHECK(out.value.value() == doctest::Approx(2.0).epsilon(1e-9));
        CHECK((*out.minimizer)[0] == doctest::Approx(0.0).epsilon(1e-9));
    }
    SUBCASE("left ray: exp(-x) over x <= 3 attains its minimum at 3")
    {
        Eigen::MatrixXd A(1, 1);
        A << 1.0;
        Eigen::VectorXd c(1);
        c << 3.0;
        const ParametricProgram p(CostSpec::builtin(BuiltinKind::ExpNeg, 1),
                                  FeasibleMapping(A, Eigen::MatrixXd::Zero(1, 1), c));
        const SolveOutcome out = solve_builtin_1d(p, vec1(0.0), kTol);
        REQUIRE(out.status == SolveStatus::Optimal);
        CHECK(out.value.value() == doctest::Approx(std::exp(-3.0)).epsilon(1e-9));
        CHECK((*out.minimizer)[0] == doctest::Approx(3.0).epsilon(1e-9));
    }
    SUBCASE("collapsed interval is infeasible")
    {
        Eigen::MatrixXd A(2, 1);
        A << -1.0, 1.0;
        Eigen::MatrixXd B(2, 1);
        B << 0.0, 1.0;
        const ParametricProgram p(CostSpec::builtin(BuiltinKind::ExpNeg, 1),
                                  FeasibleMapping(A, B, Eigen::VectorXd::Zero(2)));
        const SolveOutcome out = solve_builtin_1d(p, vec1(-1.0), kTol);  // 0 <= x <= -1
        CHECK(out.status == SolveStatus::Infeasible);
        CHECK(out.value.is_plus_infinity());
    }
}

TEST_CASE("solve_builtin_1d matches the dense grid oracle on random compact instances")
{
    Rng rng(808);
    for (int trial = 0; trial < 30; ++trial) {
        const double y_val = rng.uniform(-3.0, 3.0);
        double lo = rng.uniform(-4.0, 2.0);
        double hi = lo + rng.uniform(0.5, 4.0);
        Eigen::MatrixXd A(2, 1);
        A << -1.0, 1.0;
        Eigen::VectorXd c(2);
        c << -lo, hi;
        const ParametricProgram p(CostSpec::builtin(BuiltinKind::AbsDeviation, 1),
                                  FeasibleMapping(A, Eigen::MatrixXd::Zero(2, 1), c));
        const SolveOutcome out = solve_builtin_1d(p, vec1(y_val), kTol);
        REQUIRE(out.status == SolveStatus::Optimal);
        const double oracle =
            grid_min_1d([&](double x) { return std::abs(x - y_val); }, lo, hi, 1e-4);
        CHECK(out.value.value() <= oracle + 1e-6);
        CHECK(out.value.value() >= oracle - 1e-4);  // the oracle grid itself is 1e-4 coarse
    }
}

TEST_CASE("solve_builtin_1d rejects non-builtin programs")
{
    const auto& lin = catalog_instance("P-LIN").program;
    CHECK_THROWS_AS(solve_builtin_1d(lin, vec1(0.0), kTol), std::invalid_argument);
}
