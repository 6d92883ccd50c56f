#pragma once

#include <string>

#include "json.hpp"

#include "paramvex/program.hpp"

namespace paramvex {

/**
 * Parse a program definition document:
 *   { "n": int, "m": int,
 *     "cost": { "kind": "affine_max", "pieces": [{"p": [...], "q": [...], "r": s}, ...] }
 *           | { "kind": "quadratic", "Q": [[...]], "g": [...], "h": s }
 *           | { "kind": "builtin", "name": "exp_neg" | "abs_dev" },
 *     "feasible": { "A": [[...]], "c": [...], "B": [[...]] } }
 * Matrices are row-major nested arrays; schemas/program.schema.json is the
 * authoritative field list. Throws std::invalid_argument on malformed input.
 */
ParametricProgram parse_program(const nlohmann::json& doc, DimensionLimits limits = {});

/// Load and parse a program definition file.
ParametricProgram load_program_file(const std::string& path, DimensionLimits limits = {});

}  // namespace paramvex
