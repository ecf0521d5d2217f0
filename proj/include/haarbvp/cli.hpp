#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "haarbvp/problem.hpp"

namespace haarbvp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolverFailure = 1;
inline constexpr int kExitComparisonFailure = 2;
inline constexpr int kExitConfigError = 3;

struct RunConfig {
    std::optional<int> example;          // 1..4, or explicit parameters below
    std::optional<double> sigma;
    std::optional<double> gamma;
    std::optional<double> beta;
    std::optional<std::string> bc_name;  // "dirichlet" | "robin"

    std::string method = "newton";       // "qlm" | "newton"
    int J = 3;
    std::optional<int> iters;
    double tol = 1e-10;
    std::optional<double> guess;         // constant; defaults: qlm 0 (values),
    std::optional<std::string> guess_space;  // newton 1 (coefficients)
    std::string format = "table";        // "table" | "csv"
    std::vector<double> points;          // empty = 0.1 .. 0.9
    bool residual = false;
    bool check_reference = false;        // solve: append comparison, affect exit code
    double atol = 5e-5;
};

// Resolved problem plus the example id when a shortcut was used.
struct ResolvedProblem {
    EmdenFowlerProblem problem;
    std::optional<int> example;
};

ResolvedProblem resolve_problem(const RunConfig& cfg);

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_convergence(const RunConfig& cfg, const std::vector<int>& levels, std::ostream& out,
                    std::ostream& err);
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Locale-independent %.Ng-style formatting (to_chars), used for every number
// the commands emit. CSV uses precision 17 (round-trip), tables use 6.
std::string format_double(double v, int precision);

}  // namespace haarbvp
