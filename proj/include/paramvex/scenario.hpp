#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "paramvex/catalog.hpp"
#include "paramvex/checks.hpp"
#include "paramvex/program.hpp"

namespace paramvex {

/// A box grid with the same inclusive point count along every dimension.
struct GridSpec {
    Box box;
    int points_per_dim;

    GridSpec(Box b, int points) : box(std::move(b)), points_per_dim(points)
    {
        if (points_per_dim < 2) {
            throw std::invalid_argument("grid: points_per_dim must be >= 2");
        }
    }
};

/**
 * One sweep/check run: the program (catalog id or definition file), the
 * grid, the checks to run, tolerances, and the seed. Parsed from a JSON
 * scenario file; catalog instances fill every omitted field from their
 * metadata, file-defined programs must spell out what they need.
 */
struct ScenarioConfig {
    std::string program_label;
    ParametricProgram program;
    const CatalogInstance* instance = nullptr;  // set when program_label is a catalog id

    GridSpec grid;
    std::vector<std::string> checks;
    Tolerances tolerances;
    std::uint64_t seed = 0;
    std::optional<std::string> out_path;

    std::optional<Eigen::VectorXd> theorem1_center;
    std::optional<double> theorem1_radius;
    std::optional<Box> check_region;  // theorem2 / lemma / lipschitz region override
    int theorem2_grid_per_dim = 21;
    int theorem2_pair_count = 500;
    int lemma_target_count = 10;
    double lemma_ball_radius = 0.1;
    int lipschitz_pair_count = 1000;
    int graph_epigraph_sample_count = 400;
    int theorem1_sample_count = 50;

    static ScenarioConfig from_json(const nlohmann::json& doc, DimensionLimits limits = {});
    static ScenarioConfig from_file(const std::string& path, DimensionLimits limits = {});
};

/// Known check names, in canonical report order.
const std::vector<std::string>& known_check_names();

/// Run the configured checks and assemble the report (checks in canonical order).
AnalysisReport run_checks(const ScenarioConfig& config);

/// Evaluate v over the configured grid and render the sweep CSV
/// ("y_1,...,y_m,status,value"; the value field is empty on +/-inf rows).
std::string render_sweep_csv(const ScenarioConfig& config);

/// Exit-code decision for `check`: verdicts must match the instance's
/// expectations (pass by default, or a declared precondition violation).
bool report_matches_expectations(const AnalysisReport& report, const CatalogInstance* instance);

/// One line per catalog instance: id, dimensions, domain, pathology.
std::string render_catalog_listing();

}  // namespace paramvex
