#pragma once

#include <optional>
#include <string>
#include <vector>

#include "haarbvp/errors.hpp"
#include "haarbvp/haar.hpp"

namespace haarbvp {

enum class BoundaryKind { Dirichlet, Robin };
enum class PowerGuard { Error, Signed };
enum class MethodTag { QLM, NEWTON };

// y'' + sigma * t^gamma * y^beta = 0 on (0, 1).
// Dirichlet: y(0)=1, y(1)=0.  Robin: y(0)=1, y'(1)=y(1).
struct EmdenFowlerProblem {
    double sigma;
    double gamma;
    double beta;
    BoundaryKind bc = BoundaryKind::Dirichlet;
};

// Problems with gamma >= -2 or beta <= 1 are accepted but flagged: the
// standard benchmark instances themselves sit outside the gamma < -2 regime.
std::optional<std::string> regime_warning(const EmdenFowlerProblem& problem);

// y^beta with domain guards. y=0 maps to 0 for beta>0 and 1 for beta=0.
// Negative y with non-integer beta: Error policy throws, Signed returns
// sign(y)*|y|^beta.
double nonlinear_power(double y, double beta, PowerGuard guard = PowerGuard::Error);

// R(t) = y'' + sigma * t^gamma * y^beta.
double ode_residual(double t, double y, double ypp, const EmdenFowlerProblem& problem,
                    PowerGuard guard = PowerGuard::Error);

struct SolutionGrid {
    std::vector<double> eval_points;
    std::vector<double> y;
    std::vector<double> coefficients;
    double dy0 = 0.0;
    int iterations = 0;
    MethodTag method_tag = MethodTag::QLM;
    std::optional<double> residual_sup;
};

struct PointValues {
    double y;
    double yp;
    double ypp;
};

// Closed-form reconstruction from coefficients of the y'' expansion.
// Dirichlet: y(t) = 1 - t + sum a_i (P2_i(t) - t P2_i(1)), dy0 derived.
// Robin: y(t) = 1 + t*dy0 + sum a_i P2_i(t), dy0 an explicit unknown.
PointValues evaluate_solution(const std::vector<double>& a, double dy0, BoundaryKind bc,
                              double t);

double derived_dy0(const std::vector<double>& a);  // Dirichlet: -1 - sum a_i P2_i(1)

// Max |R(t_c)| over the collocation points.
double residual_norm(const SolutionGrid& sol, const EmdenFowlerProblem& problem,
                     const HaarSystem& system);

// Max |R(t)| over arbitrary points; points at t <= 0 are skipped (the ODE
// coefficient is singular at the origin).
double residual_sup_at(const SolutionGrid& sol, const EmdenFowlerProblem& problem,
                       const std::vector<double>& points);

std::vector<double> fine_grid(int count = 1000);  // uniform on (0, 1], excludes 0

std::vector<double> report_grid();  // t = 0.1, 0.2, ..., 0.9

}  // namespace haarbvp
