#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "haarbvp/cli.hpp"
#include "haarbvp/errors.hpp"

namespace {

void add_problem_flags(CLI::App* cmd, haarbvp::RunConfig& cfg) {
    cmd->add_option("--example", cfg.example, "Benchmark instance 1..4");
    cmd->add_option("--sigma", cfg.sigma, "Source coefficient sigma");
    cmd->add_option("--gamma", cfg.gamma, "Singular exponent gamma");
    cmd->add_option("--beta", cfg.beta, "Nonlinear exponent beta");
    cmd->add_option("--bc", cfg.bc_name, "Boundary kind: dirichlet | robin");
}

void add_solver_flags(CLI::App* cmd, haarbvp::RunConfig& cfg) {
    cmd->add_option("--method", cfg.method, "qlm | newton (default newton)");
    cmd->add_option("--J", cfg.J, "Resolution level (2^(J+1) collocation points)");
    cmd->add_option("--iters", cfg.iters, "Iteration cap (qlm: fixed pass count)");
    cmd->add_option("--tol", cfg.tol, "Sup-norm stopping tolerance");
    cmd->add_option("--guess", cfg.guess, "Constant initial guess");
    cmd->add_option("--guess-space", cfg.guess_space, "values | coefficients");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Haar wavelet collocation solver for singular Emden-Fowler problems"};
    app.require_subcommand(1);

    haarbvp::RunConfig cfg;
    std::vector<int> levels;

    CLI::App* solve = app.add_subcommand("solve", "Solve one problem and print the solution");
    add_problem_flags(solve, cfg);
    add_solver_flags(solve, cfg);
    solve->add_option("--format", cfg.format, "table | csv");
    solve->add_option("--points", cfg.points, "Evaluation points in [0,1]")->delimiter(',');
    solve->add_flag("--residual", cfg.residual, "Also report the residual sup norm");
    solve->add_flag("--check-reference", cfg.check_reference,
                    "Compare against the stored reference table");
    solve->add_option("--atol", cfg.atol, "Comparison tolerance");

    CLI::App* conv = app.add_subcommand("convergence", "Refinement study over several levels");
    add_problem_flags(conv, cfg);
    add_solver_flags(conv, cfg);
    conv->add_option("--levels", levels, "Resolution levels, e.g. 3,5,7")
        ->delimiter(',')
        ->required();
    conv->add_option("--points", cfg.points, "Evaluation points in [0,1]")->delimiter(',');

    CLI::App* cmp = app.add_subcommand("compare", "Check an example against its reference table");
    cmp->add_option("--example", cfg.example, "Benchmark instance 1..4")->required();
    add_solver_flags(cmp, cfg);
    cmp->add_option("--atol", cfg.atol, "Comparison tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? haarbvp::kExitOk : haarbvp::kExitConfigError;
    }

    try {
        if (solve->parsed()) return haarbvp::cmd_solve(cfg, std::cout, std::cerr);
        if (conv->parsed())
            return haarbvp::cmd_convergence(cfg, levels, std::cout, std::cerr);
        return haarbvp::cmd_compare(cfg, std::cout, std::cerr);
    } catch (const haarbvp::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return haarbvp::kExitConfigError;
    } catch (const haarbvp::MissingCell& e) {
        std::cerr << "error: " << e.what() << '\n';
        return haarbvp::kExitConfigError;
    } catch (const haarbvp::GridMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return haarbvp::kExitConfigError;
    } catch (const haarbvp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return haarbvp::kExitSolverFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return haarbvp::kExitSolverFailure;
    }
}
