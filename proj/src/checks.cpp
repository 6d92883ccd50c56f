#include "paramvex/checks.hpp"

#include <algorithm>
#include <cmath>

#include "paramvex/lp.hpp"

namespace paramvex {

namespace {

nlohmann::json vec_json(const Eigen::VectorXd& v)
{
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

nlohmann::json ext_json(const ExtendedReal& v)
{
    if (v.is_plus_infinity()) return "+inf";
    if (v.is_minus_infinity()) return "-inf";
    return v.value();
}

bool ext_greater_minus_inf(const ExtendedReal& v) { return !v.is_minus_infinity(); }

/// mu >= v in the extended sense (epigraph membership of the scalar pair).
bool ext_at_least(double mu, const ExtendedReal& v)
{
    if (v.is_plus_infinity()) return false;
    if (v.is_minus_infinity()) return true;
    return mu >= v.value();
}

}  // namespace

std::string_view to_string(CheckVerdict verdict)
{
    switch (verdict) {
    case CheckVerdict::Pass: return "pass";
    case CheckVerdict::Fail: return "fail";
    case CheckVerdict::PreconditionViolated: return "precondition-violated";
    }
    return "unknown";
}

nlohmann::json AnalysisReport::to_json() const
{
    nlohmann::json doc;
    doc["instance"] = instance;
    doc["seed"] = seed;
    doc["tolerances"] = {{"feasibility_eps", tolerances.feasibility_eps},
                         {"value_eps", tolerances.value_eps},
                         {"convexity_eps", tolerances.convexity_eps},
                         {"unbounded_threshold", tolerances.unbounded_threshold}};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& check : checks) {
        arr.push_back({{"name", check.name},
                       {"verdict", std::string(to_string(check.verdict))},
                       {"details", check.details}});
    }
    doc["checks"] = arr;
    return doc;
}

LemmaCombination LemmaCombination::make(const Eigen::VectorXd& y0, const Eigen::VectorXd& y,
                                        double alpha)
{
    if (!(alpha > 0.0)) throw std::invalid_argument("LemmaCombination: alpha must be positive");
    if (y0.size() != y.size()) throw std::invalid_argument("LemmaCombination: dimension mismatch");
    LemmaCombination comb{y0, y, alpha, y0 + alpha * (y0 - y), alpha / (1.0 + alpha)};
    const Eigen::VectorXd recombined = comb.beta * y + (1.0 - comb.beta) * comb.y_alpha;
    if ((recombined - y0).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + y0.cwiseAbs().maxCoeff())) {
        throw std::logic_error("LemmaCombination: recombination drifted from y0");
    }
    return comb;
}

double lemma_lower_bound(double m0, double v_alpha, double alpha)
{
    if (!(alpha > 0.0)) throw std::invalid_argument("lemma_lower_bound: alpha must be positive");
    return ((1.0 + alpha) / alpha) * m0 - v_alpha / alpha;
}

CheckResult check_equivalence(const ParametricProgram& p, const std::vector<Eigen::VectorXd>& grid,
                              const Tolerances& tol)
{
    CheckResult result{.name = "equivalence"};
    const Tolerances cmp = tol.with_value_eps(10.0 * tol.value_eps);
    for (const auto& y : grid) {
        const SolveOutcome direct = value_function(p, y, tol);
        const ExtendedReal aux = aux_value_function(p, y, tol);
        if (ext_compare(direct.value, aux, cmp) != Ordering::Equal) {
            result.verdict = CheckVerdict::Fail;
            result.details["counterexample"] = {
                {"y", vec_json(y)}, {"v", ext_json(direct.value)}, {"v_phi", ext_json(aux)}};
            return result;
        }
    }
    result.details["points"] = grid.size();
    return result;
}

CheckResult check_graph_epigraph(const ParametricProgram& p,
                                 const std::vector<std::pair<Eigen::VectorXd, double>>& samples,
                                 const Tolerances& tol)
{
    CheckResult result{.name = "graph-epigraph"};
    const double band = 10.0 * tol.value_eps;
    std::size_t compared = 0;
    std::size_t expected_failures = 0;

    for (const auto& [y, mu] : samples) {
        if (p.attainment_meta() && p.attainment_meta()->covers(y)) {
            // F_phi(y) is not closed here; the identity must break at the infimum
            const SolveOutcome outcome = value_function(p, y, tol);
            if (outcome.status != SolveStatus::InfNotAttained) {
                result.verdict = CheckVerdict::Fail;
                result.details["counterexample"] = {
                    {"y", vec_json(y)},
                    {"note", "attainment_meta covers y but the solver reports attainment"}};
                return result;
            }
            const double infimum = *outcome.infimum_hint;
            const bool member = fcost_membership(p, y, infimum, tol);
            const bool epi = ext_at_least(infimum, aux_value_function(p, y, tol));
            if (member || !epi) {
                result.verdict = CheckVerdict::Fail;
                result.details["counterexample"] = {
                    {"y", vec_json(y)},
                    {"mu", infimum},
                    {"note", "expected closed-valuedness counterexample did not materialize"}};
                return result;
            }
            ++expected_failures;
            continue;
        }

        const ExtendedReal v_phi = aux_value_function(p, y, tol);
        if (v_phi.is_finite() && std::abs(mu - v_phi.value()) <= band) continue;  // boundary band
        const bool member = fcost_membership(p, y, mu, tol);
        const bool epi = ext_at_least(mu, v_phi);
        if (member != epi) {
            result.verdict = CheckVerdict::Fail;
            result.details["counterexample"] = {{"y", vec_json(y)},
                                                {"mu", mu},
                                                {"v_phi", ext_json(v_phi)},
                                                {"membership", member},
                                                {"epigraph", epi}};
            return result;
        }
        ++compared;
    }
    result.details["pairs_compared"] = compared;
    if (expected_failures > 0) result.details["expected_closedness_failures"] = expected_failures;
    return result;
}

std::optional<LowerBoundCertificate> check_local_lower_bound(const ParametricProgram& p,
                                                             const Ball& ball, int sample_count,
                                                             std::uint64_t seed, const Tolerances& tol)
{
    if (sample_count < 1) throw std::invalid_argument("check_local_lower_bound: sample_count must be >= 1");
    std::vector<Eigen::VectorXd> points;
    points.push_back(ball.center);  // the certificate must bound v(y0) itself
    for (auto& y : sample_ball(ball, sample_count, seed)) points.push_back(std::move(y));

    std::vector<std::pair<Eigen::VectorXd, double>> evidence;
    for (const auto& y : points) {
        const SolveOutcome out = value_function(p, y, tol);
        if (out.value.is_minus_infinity()) return std::nullopt;
        if (out.value.is_finite()) evidence.emplace_back(y, out.value.value());
    }
    if (evidence.empty()) return std::nullopt;  // nothing finite on the ball: no usable bound

    double low = evidence.front().second;
    for (const auto& [y, v] : evidence) low = std::min(low, v);
    return LowerBoundCertificate{ball.center, ball, low - tol.value_eps, std::move(evidence)};
}

bool check_domain_interior(const ParametricProgram& p, const Eigen::VectorXd& y0, double delta,
                           std::uint64_t seed, const Tolerances& tol)
{
    if (!(delta > 0.0)) throw std::invalid_argument("check_domain_interior: delta must be positive");
    const auto nonempty = [&](const Eigen::VectorXd& y) {
        if (p.feasible().rows() == 0) return true;
        return lp_feasible(p.feasible().A(), p.feasible().rhs_at(y), tol);
    };
    if (!nonempty(y0)) return false;
    for (int i = 0; i < p.m(); ++i) {
        Eigen::VectorXd probe = y0;
        probe[i] = y0[i] + delta;
        if (!nonempty(probe)) return false;
        probe[i] = y0[i] - delta;
        if (!nonempty(probe)) return false;
    }
    for (const auto& y : sample_ball(Ball(y0, delta), 2 * p.m(), seed)) {
        if (!nonempty(y)) return false;
    }
    return true;
}

CheckResult check_theorem1(const ParametricProgram& p, const Eigen::VectorXd& y0, double radius,
                           int sample_count, std::uint64_t seed, const Tolerances& tol)
{
    CheckResult result{.name = "theorem1"};
    const Ball ball(y0, radius);

    if (p.attainment_meta() && p.attainment_meta()->intersects(ball)) {
        result.verdict = CheckVerdict::PreconditionViolated;
        result.details["reason"] = "F_phi is not closed-valued on the ball (attainment_meta intersects it)";
        return result;
    }
    if (!check_domain_interior(p, y0, radius, derive_seed(seed, "interior"), tol)) {
        result.verdict = CheckVerdict::PreconditionViolated;
        result.details["reason"] = "y0 failed the domain-interior probe";
        return result;
    }

    // all three statements are evaluated over the same sample set
    const std::uint64_t ball_seed = derive_seed(seed, "ball");
    const bool bounded_below =
        check_local_lower_bound(p, ball, sample_count, ball_seed, tol).has_value();

    std::vector<Eigen::VectorXd> points;
    points.push_back(y0);
    for (auto& y : sample_ball(ball, sample_count, ball_seed)) points.push_back(std::move(y));

    bool aux_above = true;
    bool direct_above = true;
    nlohmann::json witness;
    for (const auto& y : points) {
        const ExtendedReal v_phi = aux_value_function(p, y, tol);
        const SolveOutcome direct = value_function(p, y, tol);
        if (!ext_greater_minus_inf(v_phi) && aux_above) {
            aux_above = false;
            witness["aux_minus_inf_at"] = vec_json(y);
        }
        if (!ext_greater_minus_inf(direct.value) && direct_above) {
            direct_above = false;
            witness["v_minus_inf_at"] = vec_json(y);
        }
    }

    result.details["locally_bounded_below"] = bounded_below;
    result.details["aux_value_above_minus_inf"] = aux_above;
    result.details["value_above_minus_inf"] = direct_above;
    if (bounded_below == aux_above && aux_above == direct_above) {
        result.details["samples"] = points.size();
    } else {
        result.verdict = CheckVerdict::Fail;
        result.details["counterexample"] = witness.is_null() ? nlohmann::json{{"y0", vec_json(y0)}} : witness;
    }
    return result;
}

CheckResult check_theorem2(const ParametricProgram& p, const Box& region, int grid_per_dim,
                           int pair_count, std::uint64_t seed, const Tolerances& tol)
{
    CheckResult result{.name = "theorem2"};
    const auto grid = grid_points(region, grid_per_dim);
    const ValueGrid values = evaluate_grid(p, grid, tol);

    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values.statuses[i] == SolveStatus::Infeasible) {
            result.verdict = CheckVerdict::PreconditionViolated;
            result.details["reason"] = "region leaves dom F";
            result.details["witness"] = {{"y", vec_json(values.points[i])}};
            return result;
        }
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values.values[i].is_minus_infinity()) {
            result.verdict = CheckVerdict::Fail;
            result.details["counterexample"] = {{"y", vec_json(values.points[i])},
                                                {"v", "-inf"},
                                                {"property", "properness"}};
            return result;
        }
    }

    Rng rng(derive_seed(seed, "midpoints"));
    std::size_t tested = 0;
    for (int it = 0; it < pair_count; ++it) {
        Eigen::VectorXd y1(region.dim()), y2(region.dim());
        for (int d = 0; d < region.dim(); ++d) {
            y1[d] = rng.uniform(region.lower[d], region.upper[d]);
            y2[d] = rng.uniform(region.lower[d], region.upper[d]);
        }
        const SolveOutcome o1 = value_function(p, y1, tol);
        const SolveOutcome o2 = value_function(p, y2, tol);
        if (!o1.value.is_finite() || !o2.value.is_finite()) {
            result.verdict = CheckVerdict::Fail;
            result.details["counterexample"] = {
                {"y", vec_json(o1.value.is_finite() ? y2 : y1)},
                {"property", o1.value.is_plus_infinity() || o2.value.is_plus_infinity()
                                 ? "domain convexity"
                                 : "properness"}};
            return result;
        }
        const Eigen::VectorXd mid = 0.5 * (y1 + y2);
        const SolveOutcome om = value_function(p, mid, tol);
        const double rhs = 0.5 * (o1.value.value() + o2.value.value()) + tol.convexity_eps;
        if (!om.value.is_finite()) {
            result.verdict = CheckVerdict::Fail;
            result.details["counterexample"] = {
                {"y", vec_json(mid)},
                {"property", om.value.is_plus_infinity() ? "domain convexity" : "properness"}};
            return result;
        }
        if (om.value.value() > rhs) {
            result.verdict = CheckVerdict::Fail;
            result.details["counterexample"] = {{"y1", vec_json(y1)},
                                                {"y2", vec_json(y2)},
                                                {"v1", o1.value.value()},
                                                {"v2", o2.value.value()},
                                                {"v_mid", om.value.value()},
                                                {"property", "midpoint convexity"}};
            return result;
        }
        ++tested;
    }
    result.details["grid_points"] = grid.size();
    result.details["midpoint_pairs"] = tested;
    return result;
}

CheckResult check_lemma(const ParametricProgram& p, const Eigen::VectorXd& y0, const Ball& ball,
                        const std::vector<Eigen::VectorXd>& targets, int sample_count,
                        std::uint64_t seed, const Tolerances& tol)
{
    CheckResult result{.name = "lemma"};
    const auto cert = check_local_lower_bound(p, ball, sample_count, derive_seed(seed, "cert"), tol);
    if (!cert) {
        result.verdict = CheckVerdict::PreconditionViolated;
        result.details["reason"] = "no lower-bound certificate on the ball";
        return result;
    }

    static constexpr double kAlphas[] = {0.01, 0.05, 0.25};
    std::size_t tested = 0;
    for (const auto& y : targets) {
        const SolveOutcome vy = value_function(p, y, tol);
        if (!vy.value.is_finite()) {
            result.verdict = CheckVerdict::PreconditionViolated;
            result.details["reason"] = "target outside the region of finite v";
            result.details["witness"] = {{"y", vec_json(y)}};
            return result;
        }
        for (const double alpha : kAlphas) {
            const LemmaCombination comb = LemmaCombination::make(y0, y, alpha);
            if ((comb.y_alpha - y0).norm() >= ball.radius) continue;  // y_alpha must stay in the ball
            const SolveOutcome va = value_function(p, comb.y_alpha, tol);
            if (!va.value.is_finite()) continue;
            const double bound = lemma_lower_bound(cert->bound, va.value.value(), alpha);
            if (vy.value.value() < bound - 10.0 * tol.value_eps) {
                result.verdict = CheckVerdict::Fail;
                result.details["counterexample"] = {{"y", vec_json(y)},
                                                    {"alpha", alpha},
                                                    {"v", vy.value.value()},
                                                    {"propagated_bound", bound},
                                                    {"m0", cert->bound},
                                                    {"v_alpha", va.value.value()}};
                return result;
            }
            ++tested;
        }
    }
    result.details["m0"] = cert->bound;
    result.details["propagations"] = tested;
    return result;
}

std::optional<double> estimate_lipschitz(const ParametricProgram& p, const Box& region,
                                         int pair_count, std::uint64_t seed, const Tolerances& tol)
{
    if (pair_count < 1) throw std::invalid_argument("estimate_lipschitz: pair_count must be >= 1");
    Rng rng(seed);
    double max_ratio = 0.0;
    for (int it = 0; it < pair_count; ++it) {
        Eigen::VectorXd y1(region.dim()), y2(region.dim());
        for (int d = 0; d < region.dim(); ++d) {
            y1[d] = rng.uniform(region.lower[d], region.upper[d]);
            y2[d] = rng.uniform(region.lower[d], region.upper[d]);
        }
        const SolveOutcome o1 = value_function(p, y1, tol);
        const SolveOutcome o2 = value_function(p, y2, tol);
        if (!o1.value.is_finite() || !o2.value.is_finite()) return std::nullopt;
        const double dist = (y1 - y2).norm();
        if (dist < 1e-4) continue;  // floor keeps solver noise out of the quotient
        max_ratio = std::max(max_ratio, std::abs(o1.value.value() - o2.value.value()) / dist);
    }
    return max_ratio;
}

CheckResult check_lipschitz(const ParametricProgram& p, const Box& region, int pair_count,
                            std::uint64_t seed, const Tolerances& tol,
                            const std::optional<LipschitzSpec>& known)
{
    CheckResult result{.name = "lipschitz"};
    const auto estimate = estimate_lipschitz(p, region, pair_count, seed, tol);
    if (!estimate) {
        result.verdict = CheckVerdict::PreconditionViolated;
        result.details["reason"] = "v is not finite on the region";
        return result;
    }
    const auto doubled =
        estimate_lipschitz(p, region, 2 * pair_count, derive_seed(seed, "pairs2x"), tol);
    if (!doubled) {
        result.verdict = CheckVerdict::PreconditionViolated;
        result.details["reason"] = "v is not finite on the region";
        return result;
    }

    result.details["estimate"] = *estimate;
    result.details["estimate_doubled_pairs"] = *doubled;
    const double scale = std::max({*estimate, *doubled, 1e-6});
    if (std::abs(*estimate - *doubled) >= 0.10 * scale) {
        result.verdict = CheckVerdict::Fail;
        result.details["counterexample"] = {{"property", "estimate unstable under doubled pair_count"}};
        return result;
    }
    if (known) {
        result.details["known_constant"] = known->constant;
        const bool ok = known->constant > 0.0
                            ? std::abs(*estimate - known->constant) <= known->rel_tol * known->constant
                            : *estimate <= known->abs_tol;
        if (!ok) {
            result.verdict = CheckVerdict::Fail;
            result.details["counterexample"] = {{"property", "estimate disagrees with known constant"}};
            return result;
        }
    }
    return result;
}

}  // namespace paramvex
