#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "paramvex/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

paramvex::DimensionLimits limits_from_env()
{
    paramvex::DimensionLimits limits;
    if (const char* cap = std::getenv("PARAMVEX_MAX_DIM")) {
        const int v = std::atoi(cap);
        if (v < 1) {
            throw std::invalid_argument("PARAMVEX_MAX_DIM must be a positive integer");
        }
        limits.max_dim = v;
        limits.max_rows = 4 * v;
    }
    return limits;
}

paramvex::Tolerances tolerances_for_profile(const std::string& profile)
{
    using paramvex::Tolerances;
    if (profile == "default") return Tolerances{};
    if (profile == "strict") return Tolerances::make(1e-9, 1e-8, 1e-7, 1e10);
    if (profile == "loose") return Tolerances::make(1e-7, 1e-6, 1e-5, 1e10);
    throw std::invalid_argument("unknown tolerance profile '" + profile + "' (default|strict|loose)");
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << text;
    if (!out) throw std::invalid_argument("failed writing output file '" + path + "'");
}

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    std::string tol_profile = "default";
    CLI::Option* out_opt = nullptr;
    CLI::Option* seed_opt = nullptr;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--config", config_path, "scenario config JSON")->required();
        out_opt = cmd->add_option("--out", out_path, "output file (stdout when omitted)");
        seed_opt = cmd->add_option("--seed", seed, "seed override");
        cmd->add_option("--tol", tol_profile, "tolerance profile: default|strict|loose");
    }
};

paramvex::ScenarioConfig load_scenario(const CommonArgs& args)
{
    auto config = paramvex::ScenarioConfig::from_file(args.config_path, limits_from_env());
    // precedence: config-file tolerances > --tol profile > defaults
    if (args.tol_profile != "default") {
        const paramvex::Tolerances defaults{};
        if (config.tolerances.feasibility_eps == defaults.feasibility_eps &&
            config.tolerances.value_eps == defaults.value_eps &&
            config.tolerances.convexity_eps == defaults.convexity_eps &&
            config.tolerances.unbounded_threshold == defaults.unbounded_threshold) {
            config.tolerances = tolerances_for_profile(args.tol_profile);
        }
    }
    if (args.seed_opt->count() > 0) config.seed = args.seed;
    if (args.out_opt->count() > 0) config.out_path = args.out_path;
    return config;
}

int run_sweep(const CommonArgs& args)
{
    const auto config = load_scenario(args);
    const std::string csv = paramvex::render_sweep_csv(config);
    if (config.out_path) {
        write_text(*config.out_path, csv);
    } else {
        std::cout << csv;
    }
    return kExitOk;
}

int run_check(const CommonArgs& args)
{
    const auto config = load_scenario(args);
    const paramvex::AnalysisReport report = paramvex::run_checks(config);
    const std::string rendered = report.to_json().dump(2) + "\n";
    if (config.out_path) {
        write_text(*config.out_path, rendered);
    } else {
        std::cout << rendered;
    }
    for (const auto& check : report.checks) {
        std::cerr << config.program_label << " " << check.name << ": " << to_string(check.verdict)
                  << "\n";
    }
    return paramvex::report_matches_expectations(report, config.instance) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"paramvex: optimal-value functions of parametric convex programs, checked against oracles"};
    app.require_subcommand(1);

    CommonArgs sweep_args;
    CommonArgs check_args;

    auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in instances");
    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate v over a grid, write CSV");
    auto* check_cmd = app.add_subcommand("check", "run theorem checks, write a JSON report");
    sweep_args.attach(sweep_cmd);
    check_args.attach(check_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (catalog_cmd->parsed()) {
            std::cout << paramvex::render_catalog_listing();
            return kExitOk;
        }
        if (sweep_cmd->parsed()) return run_sweep(sweep_args);
        if (check_cmd->parsed()) return run_check(check_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
