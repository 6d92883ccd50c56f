#include "paramvex/program_io.hpp"

#include <fstream>

namespace paramvex {

namespace {

Eigen::VectorXd parse_vector(const nlohmann::json& arr, const std::string& what)
{
    if (!arr.is_array()) throw std::invalid_argument("program definition: " + what + " must be an array");
    Eigen::VectorXd v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number()) throw std::invalid_argument("program definition: " + what + " must be numeric");
        v[static_cast<int>(i)] = arr[i].get<double>();
    }
    return v;
}

Eigen::MatrixXd parse_matrix(const nlohmann::json& arr, int expected_cols, const std::string& what)
{
    if (!arr.is_array()) throw std::invalid_argument("program definition: " + what + " must be a nested array");
    const int rows = static_cast<int>(arr.size());
    Eigen::MatrixXd m(rows, expected_cols);
    for (int i = 0; i < rows; ++i) {
        const Eigen::VectorXd row = parse_vector(arr[i], what + " row");
        if (row.size() != expected_cols) {
            throw std::invalid_argument("program definition: " + what + " row " + std::to_string(i) +
                                        " has " + std::to_string(row.size()) + " entries, expected " +
                                        std::to_string(expected_cols));
        }
        m.row(i) = row.transpose();
    }
    return m;
}

const nlohmann::json& field(const nlohmann::json& doc, const std::string& key)
{
    const auto it = doc.find(key);
    if (it == doc.end()) throw std::invalid_argument("program definition: missing field '" + key + "'");
    return *it;
}

CostSpec parse_cost(const nlohmann::json& doc, int n, int m)
{
    const std::string kind = field(doc, "kind").get<std::string>();
    if (kind == "affine_max") {
        std::vector<AffinePiece> pieces;
        for (const auto& piece : field(doc, "pieces")) {
            pieces.push_back(AffinePiece{parse_vector(field(piece, "p"), "cost.pieces.p"),
                                         parse_vector(field(piece, "q"), "cost.pieces.q"),
                                         field(piece, "r").get<double>()});
        }
        return CostSpec::affine_max(std::move(pieces), n, m);
    }
    if (kind == "quadratic") {
        return CostSpec::quadratic(parse_matrix(field(doc, "Q"), n + m, "cost.Q"),
                                   parse_vector(field(doc, "g"), "cost.g"),
                                   field(doc, "h").get<double>(), n, m);
    }
    if (kind == "builtin") {
        if (n != 1) throw std::invalid_argument("program definition: builtin costs require n = 1");
        return CostSpec::builtin(builtin_from_name(field(doc, "name").get<std::string>()), m);
    }
    throw std::invalid_argument("program definition: unknown cost kind '" + kind + "'");
}

}  // namespace

ParametricProgram parse_program(const nlohmann::json& doc, DimensionLimits limits)
{
    const int n = field(doc, "n").get<int>();
    const int m = field(doc, "m").get<int>();
    if (n < 1 || m < 1) throw std::invalid_argument("program definition: n and m must be >= 1");

    const nlohmann::json& feas = field(doc, "feasible");
    FeasibleMapping mapping(parse_matrix(field(feas, "A"), n, "feasible.A"),
                            parse_matrix(field(feas, "B"), m, "feasible.B"),
                            parse_vector(field(feas, "c"), "feasible.c"));
    return ParametricProgram(parse_cost(field(doc, "cost"), n, m), std::move(mapping), std::nullopt,
                             nullptr, limits);
}

ParametricProgram load_program_file(const std::string& path, DimensionLimits limits)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open program definition '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("program definition '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_program(doc, limits);
}

}  // namespace paramvex
