#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "paramvex/geometry.hpp"
#include "paramvex/program.hpp"
#include "paramvex/value_function.hpp"

namespace paramvex {

enum class CheckVerdict { Pass, Fail, PreconditionViolated };

std::string_view to_string(CheckVerdict verdict);

/// Outcome of one theorem/lemma/corollary check; failures always carry a
/// concrete counterexample in details.
struct CheckResult {
    std::string name;
    CheckVerdict verdict = CheckVerdict::Pass;
    nlohmann::json details = nlohmann::json::object();
};

/// Machine-readable verdicts for one analyzed instance.
struct AnalysisReport {
    std::string instance;
    std::vector<CheckResult> checks;
    Tolerances tolerances;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
};

/// Evidence that v is bounded below by `bound` on the sampled ball.
struct LowerBoundCertificate {
    Eigen::VectorXd center;
    Ball ball;
    double bound;
    std::vector<std::pair<Eigen::VectorXd, double>> evidence;  // (y, v(y)), each >= bound - value_eps
};

/// The combination y0 = beta y + (1 - beta) y_alpha with beta = alpha/(1+alpha).
struct LemmaCombination {
    Eigen::VectorXd y0;
    Eigen::VectorXd y;
    double alpha;
    Eigen::VectorXd y_alpha;
    double beta;

    static LemmaCombination make(const Eigen::VectorXd& y0, const Eigen::VectorXd& y, double alpha);
};

/// Lower bound at y propagated from bound m0 at y0 and the value v_alpha at
/// y_alpha = y0 + alpha (y0 - y): ((1+alpha)/alpha) m0 - v_alpha/alpha.
double lemma_lower_bound(double m0, double v_alpha, double alpha);

/**
 * v and v_phi must agree at every grid point: exact status match for the
 * infinite conventions, values within 10 * value_eps where finite. The
 * first discrepancy is reported as the counterexample.
 */
CheckResult check_equivalence(const ParametricProgram& p, const std::vector<Eigen::VectorXd>& grid,
                              const Tolerances& tol);

/**
 * Graph-epigraph identity: mu in F_phi(y) iff mu >= v_phi(y), tested outside
 * a 10 * value_eps boundary band around v_phi(y). On parameters covered by
 * attainment_meta the identity is expected to fail at mu = infimum (F_phi is
 * not closed-valued there); the check then asserts that documented failure.
 */
CheckResult check_graph_epigraph(const ParametricProgram& p,
                                 const std::vector<std::pair<Eigen::VectorXd, double>>& samples,
                                 const Tolerances& tol);

/**
 * Sample v on the ball (center first); a certificate with
 * bound = min sampled value - value_eps is returned when every sampled
 * value is finite, and nothing when any sample is -inf. Infeasible (+inf)
 * samples are recorded but impose no bound.
 */
std::optional<LowerBoundCertificate> check_local_lower_bound(const ParametricProgram& p,
                                                             const Ball& ball, int sample_count,
                                                             std::uint64_t seed, const Tolerances& tol);

/// F(y) nonempty at y0, at y0 +/- delta e_i, and at 2m random points within
/// distance delta (probes interior membership of dom F = dom F_phi).
bool check_domain_interior(const ParametricProgram& p, const Eigen::VectorXd& y0, double delta,
                           std::uint64_t seed, const Tolerances& tol);

/**
 * The theorem's three equivalent statements on a ball around y0:
 * (1) local lower boundedness, (2) v_phi > -inf at all samples,
 * (3) v > -inf at all samples. Pass iff the three booleans agree.
 * Precondition-violated when y0 fails the domain-interior probe or when
 * attainment_meta intersects the ball (closed-valuedness side condition).
 */
CheckResult check_theorem1(const ParametricProgram& p, const Eigen::VectorXd& y0, double radius,
                           int sample_count, std::uint64_t seed, const Tolerances& tol);

/**
 * Properness and midpoint convexity of v on a box inside dom F: every grid
 * value finite, and v((y1+y2)/2) <= (v(y1)+v(y2))/2 + convexity_eps over at
 * least `pair_count` random pairs.
 */
CheckResult check_theorem2(const ParametricProgram& p, const Box& region, int grid_per_dim,
                           int pair_count, std::uint64_t seed, const Tolerances& tol);

/**
 * Propagates the certificate bound at y0 to each target y through
 * lemma_lower_bound for alpha in {0.01, 0.05, 0.25}, skipping alphas whose
 * y_alpha leaves the ball, and asserts v(y) >= bound - 10 * value_eps.
 */
CheckResult check_lemma(const ParametricProgram& p, const Eigen::VectorXd& y0, const Ball& ball,
                        const std::vector<Eigen::VectorXd>& targets, int sample_count,
                        std::uint64_t seed, const Tolerances& tol);

/**
 * Max sampled difference quotient |v(y1)-v(y2)| / |y1-y2| over `pair_count`
 * pairs in the region, ignoring pairs closer than 1e-4. Returns nothing when
 * a sampled value is not finite (region must sit inside dom F with finite v).
 */
std::optional<double> estimate_lipschitz(const ParametricProgram& p, const Box& region,
                                         int pair_count, std::uint64_t seed, const Tolerances& tol);

/// Expected Lipschitz constant on a stated box, with the comparison slack.
struct LipschitzSpec {
    Box box;
    double constant = 0.0;
    double rel_tol = 0.15;   // used when constant > 0
    double abs_tol = 1e-3;   // used when constant == 0
};

/**
 * Wraps estimate_lipschitz as a reportable check: the estimate must be
 * stable under doubling pair_count (< 10% change) and, when a known
 * constant is supplied, match it within its stated slack.
 */
CheckResult check_lipschitz(const ParametricProgram& p, const Box& region, int pair_count,
                            std::uint64_t seed, const Tolerances& tol,
                            const std::optional<LipschitzSpec>& known = std::nullopt);

}  // namespace paramvex
