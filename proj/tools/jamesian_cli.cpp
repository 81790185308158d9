#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jamesian/cli.hpp"

namespace {

using namespace jamesian;
namespace jc = jamesian::cli;

struct SpecOptions {
    std::string kind = "adams";
    std::string f;
    double tolerance = 0.0;

    void attach(CLI::App* app) {
        app->add_option("--kind", kind, "adams | representable | salzmann-transfer")->capture_default_str();
        app->add_option("--f", f, "logit | scaled-logit:k | piecewise:eps");
        app->add_option("--tol", tolerance, "certification tolerance override");
    }

    jc::FunctionSpec resolve() const {
        jc::FunctionSpec s;
        s.kind = jc::parse_kind(kind);
        s.f = f;
        if (tolerance != 0.0) s.tolerance = tolerance;
        return s;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Involutive Jamesian functions: evaluation, axiom checks, witnesses and matchup tables"};
    app.require_subcommand(1);

    SpecOptions eval_spec, check_spec, witness_spec, grid_spec, predict_spec;

    auto* eval = app.add_subcommand("eval", "Evaluate J(a, b) on the closed square minus the corners (0,0), (1,1)");
    double a = 0.0, b = 0.0;
    eval_spec.attach(eval);
    eval->add_option("a", a)->required();
    eval->add_option("b", b)->required();

    auto* check = app.add_subcommand("check", "Check the axioms and measure the transitivity defect (JSON)");
    int check_grid = 99;
    std::size_t check_triples = 10000;
    std::uint64_t check_seed = 0;
    check_spec.attach(check);
    check->add_option("--grid", check_grid, "interior lattice size n (n x n points)")->capture_default_str();
    check->add_option("--triples", check_triples, "random triples for the defect")->capture_default_str();
    check->add_option("--seed", check_seed)->capture_default_str();

    auto* witness = app.add_subcommand("witness", "Search for a transitivity counterexample (JSON or 'none')");
    double threshold = 1e-6;
    std::size_t budget = 10000;
    std::uint64_t witness_seed = 0;
    witness_spec.attach(witness);
    witness->add_option("--threshold", threshold)->capture_default_str();
    witness->add_option("--budget", budget, "random triples to try after the pinned ones")->capture_default_str();
    witness->add_option("--seed", witness_seed)->capture_default_str();

    auto* grid = app.add_subcommand("grid", "Write J at interior lattice points as CSV a,b,J");
    int grid_resolution = 99;
    std::string grid_output;
    grid_spec.attach(grid);
    grid->add_option("--resolution", grid_resolution)->capture_default_str();
    grid->add_option("--output,-o", grid_output)->required();

    auto* regions = app.add_subcommand("regions", "Write the explicit-region labels as CSV a,b,label");
    double eps = 0.1;
    int region_resolution = 99;
    std::string region_output;
    regions->add_option("--eps", eps)->capture_default_str();
    regions->add_option("--resolution", region_resolution)->capture_default_str();
    regions->add_option("--output,-o", region_output)->required();

    auto* predict = app.add_subcommand("predict", "Pairwise win probabilities from a team,pct standings CSV");
    std::string standings;
    predict_spec.attach(predict);
    predict->add_option("standings", standings)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? jc::kExitOk : jc::kExitUsage;
    }

    try {
        if (*eval) return jc::cmd_eval(eval_spec.resolve(), a, b, std::cout);
        if (*check) return jc::cmd_check(check_spec.resolve(), check_grid, check_triples, check_seed, std::cout);
        if (*witness)
            return jc::cmd_witness(witness_spec.resolve(), threshold, budget, witness_seed, std::cout);
        if (*grid) return jc::cmd_grid(grid_spec.resolve(), grid_resolution, grid_output);
        if (*regions) return jc::cmd_regions(eps, region_resolution, region_output);
        if (*predict) return jc::cmd_predict(predict_spec.resolve(), standings, std::cout);
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return jc::kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return jc::kExitUsage;
    }
    return jc::kExitUsage;
}
