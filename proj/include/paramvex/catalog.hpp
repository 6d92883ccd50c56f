#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paramvex/checks.hpp"
#include "paramvex/program.hpp"

namespace paramvex {

/**
 * A catalog entry: a program with a closed-form value oracle plus the
 * default analysis configuration (regions, theorem-1 ball, which checks
 * apply and which verdicts its declared pathologies make expected).
 */
struct CatalogInstance {
    std::string id;
    ParametricProgram program;
    std::string known_domain;
    std::optional<LipschitzSpec> known_lipschitz;
    std::string notes;
    std::string pathology;

    Box analysis_box;                  // stated grid region for sweeps and equivalence
    std::optional<Box> convex_region;  // where v is finite (theorem2 / lemma / lipschitz); absent if nowhere
    Eigen::VectorXd theorem1_center;
    double theorem1_radius = 0.5;

    std::vector<std::string> applicable_checks;
    std::map<std::string, CheckVerdict> expected_verdicts;  // checks not listed are expected to pass

    CheckVerdict expected_verdict(const std::string& check) const
    {
        const auto it = expected_verdicts.find(check);
        return it == expected_verdicts.end() ? CheckVerdict::Pass : it->second;
    }
};

/// The six built-in instances, constructed once.
const std::vector<CatalogInstance>& catalog();

/// Lookup by id; throws std::invalid_argument for unknown ids.
const CatalogInstance& catalog_instance(const std::string& id);

}  // namespace paramvex
