#include "paramvex/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace paramvex {

namespace {

Eigen::VectorXd vec1(double v)
{
    Eigen::VectorXd x(1);
    x << v;
    return x;
}

Eigen::MatrixXd mat(std::initializer_list<double> entries, int rows, int cols)
{
    Eigen::MatrixXd m(rows, cols);
    int i = 0;
    for (double e : entries) {
        m(i / cols, i % cols) = e;
        ++i;
    }
    return m;
}

const std::vector<std::string> kAllChecks = {"equivalence", "graph-epigraph", "theorem1",
                                             "theorem2",    "lemma",          "lipschitz"};
const std::vector<std::string> kImproperChecks = {"equivalence", "graph-epigraph", "theorem1"};

/// min x  s.t.  x >= y;  v(y) = y.
CatalogInstance make_p_lin()
{
    auto cost = CostSpec::affine_max({AffinePiece{vec1(1.0), vec1(0.0), 0.0}}, 1, 1);
    FeasibleMapping F(mat({-1.0}, 1, 1), mat({-1.0}, 1, 1), vec1(0.0));
    ParametricProgram program(std::move(cost), std::move(F), std::nullopt,
                              [](const Eigen::VectorXd& y) { return ExtendedReal::finite(y[0]); });
    return CatalogInstance{
        .id = "P-LIN",
        .program = std::move(program),
        .known_domain = "all of R",
        .known_lipschitz = LipschitzSpec{Box::interval(-1.0, 1.0), 1.0, 0.05, 1e-3},
        .notes = "identity cost over a translated half-line; v(y) = y",
        .pathology = "none: smooth linear value, exercises the plain optimal path",
        .analysis_box = Box::interval(-1.0, 1.0),
        .convex_region = Box::interval(-1.0, 1.0),
        .theorem1_center = vec1(0.0),
        .theorem1_radius = 0.5,
        .applicable_checks = kAllChecks,
        .expected_verdicts = {}};
}

/// min x^2  s.t.  x >= y;  v(y) = max(0, y)^2.
CatalogInstance make_p_relu()
{
    Eigen::MatrixXd Q = mat({2.0, 0.0, 0.0, 0.0}, 2, 2);
    auto cost = CostSpec::quadratic(Q, Eigen::VectorXd::Zero(2), 0.0, 1, 1);
    FeasibleMapping F(mat({-1.0}, 1, 1), mat({-1.0}, 1, 1), vec1(0.0));
    ParametricProgram program(std::move(cost), std::move(F), std::nullopt,
                              [](const Eigen::VectorXd& y) {
                                  const double t = std::max(0.0, y[0]);
                                  return ExtendedReal::finite(t * t);
                              });
    return CatalogInstance{
        .id = "P-RELU",
        .program = std::move(program),
        .known_domain = "all of R",
        .known_lipschitz = LipschitzSpec{Box::interval(0.0, 2.0), 4.0, 0.10, 1e-3},
        .notes = "quadratic cost with an inactive-constraint kink; v(y) = max(0, y)^2",
        .pathology = "kinked value function: smooth pieces glued at y = 0",
        .analysis_box = Box::interval(-2.0, 2.0),
        .convex_region = Box::interval(-2.0, 2.0),
        .theorem1_center = vec1(0.0),
        .theorem1_radius = 0.5,
        .applicable_checks = kAllChecks,
        .expected_verdicts = {}};
}

/// min -x  s.t.  0 <= x <= y;  v(y) = -y for y >= 0, +inf otherwise.
CatalogInstance make_p_int()
{
    auto cost = CostSpec::affine_max({AffinePiece{vec1(-1.0), vec1(0.0), 0.0}}, 1, 1);
    FeasibleMapping F(mat({-1.0, 1.0}, 2, 1), mat({0.0, 1.0}, 2, 1), Eigen::VectorXd::Zero(2));
    ParametricProgram program(std::move(cost), std::move(F), std::nullopt,
                              [](const Eigen::VectorXd& y) {
                                  return y[0] >= 0.0 ? ExtendedReal::finite(-y[0])
                                                     : ExtendedReal::plus_infinity();
                              });
    return CatalogInstance{
        .id = "P-INT",
        .program = std::move(program),
        .known_domain = "{ y >= 0 }",
        .known_lipschitz = LipschitzSpec{Box::interval(0.25, 2.0), 1.0, 0.05, 1e-3},
        .notes = "interval feasible set that empties for y < 0; v(y) = -y on the domain",
        .pathology = "empty feasible set for y < 0: v = +inf off the domain",
        .analysis_box = Box::interval(-1.0, 1.0),
        .convex_region = Box::interval(0.25, 2.0),
        .theorem1_center = vec1(1.0),
        .theorem1_radius = 0.5,
        .applicable_checks = kAllChecks,
        .expected_verdicts = {}};
}

/// min -x  s.t.  x >= y;  v = -inf everywhere.
CatalogInstance make_p_unb()
{
    auto cost = CostSpec::affine_max({AffinePiece{vec1(-1.0), vec1(0.0), 0.0}}, 1, 1);
    FeasibleMapping F(mat({-1.0}, 1, 1), mat({-1.0}, 1, 1), vec1(0.0));
    ParametricProgram program(std::move(cost), std::move(F), std::nullopt,
                              [](const Eigen::VectorXd&) { return ExtendedReal::minus_infinity(); });
    return CatalogInstance{
        .id = "P-UNB",
        .program = std::move(program),
        .known_domain = "all of R",
        .known_lipschitz = std::nullopt,
        .notes = "descent ray in every feasible set; v identically -inf",
        .pathology = "unbounded below everywhere: v = -inf, improper on every region",
        .analysis_box = Box::interval(-1.0, 1.0),
        .convex_region = std::nullopt,
        .theorem1_center = vec1(1.0),
        .theorem1_radius = 0.5,
        .applicable_checks = kImproperChecks,
        .expected_verdicts = {}};
}

/// min exp(-x)  s.t.  x >= y;  infimum 0, never attained: v = -inf by convention.
CatalogInstance make_p_exp()
{
    auto cost = CostSpec::builtin(BuiltinKind::ExpNeg, 1);
    FeasibleMapping F(mat({-1.0}, 1, 1), mat({-1.0}, 1, 1), vec1(0.0));
    ParametricProgram program(std::move(cost), std::move(F), AttainmentMeta::all_parameters(),
                              [](const Eigen::VectorXd&) { return ExtendedReal::minus_infinity(); });
    return CatalogInstance{
        .id = "P-EXP",
        .program = std::move(program),
        .known_domain = "all of R",
        .known_lipschitz = std::nullopt,
        .notes = "exp(-x) slides to its infimum 0 without attaining it; v = -inf by the convention",
        .pathology = "F_phi non-closed-valued everywhere (infimum never attained)",
        .analysis_box = Box::interval(-1.0, 1.0),
        .convex_region = std::nullopt,
        .theorem1_center = vec1(0.0),
        .theorem1_radius = 0.5,
        .applicable_checks = kImproperChecks,
        .expected_verdicts = {{"theorem1", CheckVerdict::PreconditionViolated}}};
}

/// min (x - y)^2  s.t.  -1 <= x <= 1;  v(y) = dist(y, [-1, 1])^2.
CatalogInstance make_p_proj()
{
    Eigen::MatrixXd Q = mat({2.0, -2.0, -2.0, 2.0}, 2, 2);
    auto cost = CostSpec::quadratic(Q, Eigen::VectorXd::Zero(2), 0.0, 1, 1);
    FeasibleMapping F(mat({1.0, -1.0}, 2, 1), Eigen::MatrixXd::Zero(2, 1), Eigen::VectorXd::Ones(2));
    ParametricProgram program(std::move(cost), std::move(F), std::nullopt,
                              [](const Eigen::VectorXd& y) {
                                  const double d = std::max({0.0, y[0] - 1.0, -1.0 - y[0]});
                                  return ExtendedReal::finite(d * d);
                              });
    return CatalogInstance{
        .id = "P-PROJ",
        .program = std::move(program),
        .known_domain = "all of R (compact feasible values)",
        .known_lipschitz = LipschitzSpec{Box::interval(-0.5, 0.5), 0.0, 0.10, 1e-3},
        .notes = "squared distance of y to [-1, 1]; flat on the interval, quadratic outside",
        .pathology = "flat plateau: v vanishes identically on [-1, 1]",
        .analysis_box = Box::interval(-3.0, 3.0),
        .convex_region = Box::interval(-3.0, 3.0),
        .theorem1_center = vec1(0.0),
        .theorem1_radius = 0.5,
        .applicable_checks = kAllChecks,
        .expected_verdicts = {}};
}

}  // namespace

const std::vector<CatalogInstance>& catalog()
{
    static const std::vector<CatalogInstance> instances = [] {
        std::vector<CatalogInstance> out;
        out.push_back(make_p_lin());
        out.push_back(make_p_relu());
        out.push_back(make_p_int());
        out.push_back(make_p_unb());
        out.push_back(make_p_exp());
        out.push_back(make_p_proj());
        return out;
    }();
    return instances;
}

const CatalogInstance& catalog_instance(const std::string& id)
{
    for (const auto& instance : catalog()) {
        if (instance.id == id) return instance;
    }
    throw std::invalid_argument("unknown catalog instance '" + id + "'");
}

}  // namespace paramvex
