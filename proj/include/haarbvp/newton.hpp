#pragma once

#include <vector>

#include "haarbvp/linsolve.hpp"
#include "haarbvp/problem.hpp"

namespace haarbvp {

enum class JacobianMode { Analytic, FiniteDifference };

struct NewtonSettings {
    int max_iter = 50;
    double tol = 1e-10;                   // on ||Phi||_inf
    std::vector<double> init_coeffs;      // empty = all ones
    int damping = 30;                     // max step halvings; 0 = plain Newton
    JacobianMode jacobian_mode = JacobianMode::Analytic;
    PowerGuard guard = PowerGuard::Error;
};

// Robin case carries the initial slope as an extra unknown.
struct AugmentedUnknowns {
    std::vector<double> a;
    double dy0 = 0.0;
};

// Phi_c(a) = sum_i a_i h_i(t_c) + sigma t_c^gamma y(t_c)^beta with the
// Dirichlet closed-form y.
std::vector<double> residual_system_dirichlet(const std::vector<double>& a,
                                              const EmdenFowlerProblem& problem,
                                              const HaarSystem& system,
                                              PowerGuard guard = PowerGuard::Error);

// J(c,i) = h_i(t_c) + sigma beta t_c^gamma y(t_c)^{beta-1} (P2_i(t_c) - t_c P2_i(1))
DenseMatrix jacobian_dirichlet(const std::vector<double>& a, const EmdenFowlerProblem& problem,
                               const HaarSystem& system, PowerGuard guard = PowerGuard::Error);

// Components 1..2M collocate the ODE with the Robin closed-form y; component
// 2M+1 is the boundary row sum_i a_i (P1_i(1) - P2_i(1)) - 1 = 0.
std::vector<double> residual_system_robin(const AugmentedUnknowns& u,
                                          const EmdenFowlerProblem& problem,
                                          const HaarSystem& system,
                                          PowerGuard guard = PowerGuard::Error);

DenseMatrix jacobian_robin(const AugmentedUnknowns& u, const EmdenFowlerProblem& problem,
                           const HaarSystem& system, PowerGuard guard = PowerGuard::Error);

// Central finite differences of the assembled residual, step h.
DenseMatrix jacobian_finite_difference(const std::vector<double>& unknowns,
                                       const EmdenFowlerProblem& problem,
                                       const HaarSystem& system, PowerGuard guard,
                                       double h = 1e-6);

// Convert a constant y-value guess into coefficients through the curvature the
// ODE implies for it: y''(t_c) = -sigma t_c^gamma g^beta, then a = H^{-1} y''.
std::vector<double> coeffs_from_value_guess(double value, const EmdenFowlerProblem& problem,
                                            const HaarSystem& system,
                                            PowerGuard guard = PowerGuard::Error);

SolutionGrid solve_newton(const EmdenFowlerProblem& problem, const ResolutionConfig& config,
                          const NewtonSettings& settings,
                          const std::vector<double>& eval_points = report_grid());

}  // namespace haarbvp
