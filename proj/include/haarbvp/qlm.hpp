#pragma once

#include <utility>
#include <vector>

#include "haarbvp/linsolve.hpp"
#include "haarbvp/problem.hpp"

namespace haarbvp {

struct QlmSettings {
    int max_iter = 50;
    double tol = 1e-10;                   // sup-norm change of collocation values
    std::vector<double> init_guess;       // y-values at collocation points; empty = zeros
    PowerGuard guard = PowerGuard::Error;
};

// Linearized collocation system around the iterate y_r (Dirichlet only):
//   A(c,i) = h_i(t_c) + sigma*beta*t_c^gamma*y_r^{beta-1} * (P2_i(t_c) - t_c*P2_i(1))
//   b(c)   = sigma*(beta-1)*t_c^gamma*y_r^beta - sigma*beta*(1-t_c)*t_c^gamma*y_r^{beta-1}
std::pair<DenseMatrix, std::vector<double>> assemble(const EmdenFowlerProblem& problem,
                                                     const HaarSystem& system,
                                                     const std::vector<double>& y_r,
                                                     PowerGuard guard = PowerGuard::Error);

PointValues reconstruct(const std::vector<double>& a, const HaarSystem& system, double t);

SolutionGrid solve_qlm(const EmdenFowlerProblem& problem, const ResolutionConfig& config,
                       const QlmSettings& settings,
                       const std::vector<double>& eval_points = report_grid());

}  // namespace haarbvp
