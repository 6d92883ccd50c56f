#include "paramvex/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "paramvex/program_io.hpp"

namespace paramvex {

namespace {

std::string fmt_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Eigen::VectorXd parse_point(const nlohmann::json& arr, const std::string& what)
{
    if (!arr.is_array() || arr.empty()) {
        throw std::invalid_argument("scenario: " + what + " must be a non-empty array");
    }
    Eigen::VectorXd v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) v[static_cast<int>(i)] = arr[i].get<double>();
    return v;
}

Box parse_box(const nlohmann::json& doc, const std::string& what)
{
    return Box(parse_point(doc.at("lower"), what + ".lower"), parse_point(doc.at("upper"), what + ".upper"));
}

Tolerances parse_tolerances(const nlohmann::json& doc, Tolerances base)
{
    if (doc.contains("feasibility_eps")) base.feasibility_eps = doc["feasibility_eps"].get<double>();
    if (doc.contains("value_eps")) base.value_eps = doc["value_eps"].get<double>();
    if (doc.contains("convexity_eps")) base.convexity_eps = doc["convexity_eps"].get<double>();
    if (doc.contains("unbounded_threshold")) base.unbounded_threshold = doc["unbounded_threshold"].get<double>();
    base.validate();
    return base;
}

/// Sample (y, mu) pairs for the graph-epigraph check: y uniform over the
/// grid box, mu anchored at the value scale so both membership outcomes occur.
std::vector<std::pair<Eigen::VectorXd, double>> graph_epigraph_samples(const ScenarioConfig& config,
                                                                       int count, std::uint64_t seed)
{
    std::vector<std::pair<Eigen::VectorXd, double>> samples;
    samples.reserve(static_cast<std::size_t>(count));
    Rng rng(seed);
    const Box& box = config.grid.box;
    for (int i = 0; i < count; ++i) {
        Eigen::VectorXd y(box.dim());
        for (int d = 0; d < box.dim(); ++d) y[d] = rng.uniform(box.lower[d], box.upper[d]);
        const SolveOutcome out = value_function(config.program, y, config.tolerances);
        const double anchor = out.value.is_finite() ? out.value.value()
                              : out.infimum_hint    ? *out.infimum_hint
                                                    : 0.0;
        samples.emplace_back(std::move(y), anchor + rng.uniform(-3.0, 3.0));
    }
    return samples;
}

Box effective_region(const ScenarioConfig& config)
{
    if (config.check_region) return *config.check_region;
    if (config.instance && config.instance->convex_region) return *config.instance->convex_region;
    return config.grid.box;
}

Eigen::VectorXd effective_theorem1_center(const ScenarioConfig& config)
{
    if (config.theorem1_center) return *config.theorem1_center;
    if (config.instance) return config.instance->theorem1_center;
    throw std::invalid_argument("scenario: theorem1 requires a center for file-defined programs");
}

double effective_theorem1_radius(const ScenarioConfig& config)
{
    if (config.theorem1_radius) return *config.theorem1_radius;
    if (config.instance) return config.instance->theorem1_radius;
    return 0.5;
}

}  // namespace

const std::vector<std::string>& known_check_names()
{
    static const std::vector<std::string> names = {"equivalence", "graph-epigraph", "theorem1",
                                                   "theorem2",    "lemma",          "lipschitz"};
    return names;
}

ScenarioConfig ScenarioConfig::from_json(const nlohmann::json& doc, DimensionLimits limits)
{
    if (!doc.contains("program")) throw std::invalid_argument("scenario: missing 'program'");

    std::string label;
    const CatalogInstance* instance = nullptr;
    std::optional<ParametricProgram> program;
    if (doc["program"].is_string()) {
        label = doc["program"].get<std::string>();
        instance = &catalog_instance(label);
        program = instance->program;
    } else if (doc["program"].is_object() && doc["program"].contains("file")) {
        label = doc["program"]["file"].get<std::string>();
        program = load_program_file(label, limits);
    } else {
        throw std::invalid_argument("scenario: 'program' must be a catalog id or {\"file\": path}");
    }

    std::optional<GridSpec> grid;
    if (doc.contains("grid")) {
        const auto& g = doc["grid"];
        grid.emplace(parse_box(g, "grid"), g.value("points_per_dim", 101));
        if (grid->box.dim() != program->m()) {
            throw std::invalid_argument("scenario: grid dimension disagrees with the program");
        }
    } else if (instance) {
        grid.emplace(instance->analysis_box, 101);
    } else {
        throw std::invalid_argument("scenario: file-defined programs need an explicit 'grid'");
    }

    ScenarioConfig config{std::move(label), std::move(*program), instance, std::move(*grid)};

    if (doc.contains("checks")) {
        for (const auto& name : doc["checks"]) {
            const std::string check = name.get<std::string>();
            const auto& known = known_check_names();
            if (std::find(known.begin(), known.end(), check) == known.end()) {
                throw std::invalid_argument("scenario: unknown check '" + check + "'");
            }
            config.checks.push_back(check);
        }
    } else if (instance) {
        config.checks = instance->applicable_checks;
    } else {
        config.checks = {"equivalence", "graph-epigraph"};
    }

    if (doc.contains("tolerances")) config.tolerances = parse_tolerances(doc["tolerances"], Tolerances{});
    config.seed = doc.value("seed", std::uint64_t{0});
    if (doc.contains("out")) config.out_path = doc["out"].get<std::string>();

    if (doc.contains("theorem1")) {
        const auto& t = doc["theorem1"];
        if (t.contains("center")) config.theorem1_center = parse_point(t["center"], "theorem1.center");
        if (t.contains("radius")) config.theorem1_radius = t["radius"].get<double>();
        if (t.contains("samples")) config.theorem1_sample_count = t["samples"].get<int>();
    }
    if (doc.contains("region")) config.check_region = parse_box(doc["region"], "region");
    if (doc.contains("theorem2")) {
        const auto& t = doc["theorem2"];
        if (t.contains("grid_per_dim")) config.theorem2_grid_per_dim = t["grid_per_dim"].get<int>();
        if (t.contains("pair_count")) config.theorem2_pair_count = t["pair_count"].get<int>();
    }
    if (doc.contains("lemma")) {
        const auto& l = doc["lemma"];
        if (l.contains("target_count")) config.lemma_target_count = l["target_count"].get<int>();
        if (l.contains("ball_radius")) config.lemma_ball_radius = l["ball_radius"].get<double>();
    }
    if (doc.contains("lipschitz")) {
        const auto& l = doc["lipschitz"];
        if (l.contains("pair_count")) config.lipschitz_pair_count = l["pair_count"].get<int>();
    }
    if (doc.contains("graph_epigraph")) {
        const auto& g = doc["graph_epigraph"];
        if (g.contains("sample_count")) config.graph_epigraph_sample_count = g["sample_count"].get<int>();
    }
    return config;
}

ScenarioConfig ScenarioConfig::from_file(const std::string& path, DimensionLimits limits)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario config '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("scenario config '" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(doc, limits);
}

AnalysisReport run_checks(const ScenarioConfig& config)
{
    AnalysisReport report;
    report.instance = config.program_label;
    report.tolerances = config.tolerances;
    report.seed = config.seed;

    const auto requested = [&](const std::string& name) {
        return std::find(config.checks.begin(), config.checks.end(), name) != config.checks.end();
    };
    const ParametricProgram& p = config.program;
    const Tolerances& tol = config.tolerances;

    if (requested("equivalence")) {
        report.checks.push_back(
            check_equivalence(p, grid_points(config.grid.box, config.grid.points_per_dim), tol));
    }
    if (requested("graph-epigraph")) {
        const auto samples = graph_epigraph_samples(config, config.graph_epigraph_sample_count,
                                                    derive_seed(config.seed, "graph-epigraph"));
        report.checks.push_back(check_graph_epigraph(p, samples, tol));
    }
    if (requested("theorem1")) {
        report.checks.push_back(check_theorem1(p, effective_theorem1_center(config),
                                               effective_theorem1_radius(config),
                                               config.theorem1_sample_count,
                                               derive_seed(config.seed, "theorem1"), tol));
    }
    if (requested("theorem2")) {
        report.checks.push_back(check_theorem2(p, effective_region(config), config.theorem2_grid_per_dim,
                                               config.theorem2_pair_count,
                                               derive_seed(config.seed, "theorem2"), tol));
    }
    if (requested("lemma")) {
        const Eigen::VectorXd y0 = effective_theorem1_center(config);
        const Box region = effective_region(config);
        const auto targets =
            sample_box(region, config.lemma_target_count, derive_seed(config.seed, "lemma-targets"));
        report.checks.push_back(check_lemma(p, y0, Ball(y0, config.lemma_ball_radius), targets, 50,
                                            derive_seed(config.seed, "lemma"), tol));
    }
    if (requested("lipschitz")) {
        std::optional<LipschitzSpec> known;
        Box region = effective_region(config);
        if (config.instance && config.instance->known_lipschitz) {
            known = config.instance->known_lipschitz;
            if (!config.check_region) region = known->box;
        }
        report.checks.push_back(check_lipschitz(p, region, config.lipschitz_pair_count,
                                                derive_seed(config.seed, "lipschitz"), tol, known));
    }
    return report;
}

std::string render_sweep_csv(const ScenarioConfig& config)
{
    const auto points = grid_points(config.grid.box, config.grid.points_per_dim);
    const ValueGrid grid = evaluate_grid(config.program, points, config.tolerances);

    std::ostringstream out;
    for (int d = 0; d < config.program.m(); ++d) out << "y_" << (d + 1) << ",";
    out << "status,value\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (int d = 0; d < grid.points[i].size(); ++d) out << fmt_double(grid.points[i][d]) << ",";
        out << to_string(grid.statuses[i]) << ",";
        if (grid.values[i].is_finite()) out << fmt_double(grid.values[i].value());
        out << "\n";
    }
    return out.str();
}

bool report_matches_expectations(const AnalysisReport& report, const CatalogInstance* instance)
{
    for (const auto& check : report.checks) {
        const CheckVerdict expected =
            instance ? instance->expected_verdict(check.name) : CheckVerdict::Pass;
        if (check.verdict != expected) return false;
    }
    return true;
}

std::string render_catalog_listing()
{
    std::ostringstream out;
    for (const auto& instance : catalog()) {
        out << instance.id << "  n=" << instance.program.n() << " m=" << instance.program.m()
            << "  dom F: " << instance.known_domain << "\n"
            << "        " << instance.pathology << "\n";
    }
    return out.str();
}

}  // namespace paramvex
