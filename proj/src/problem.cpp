#include "haarbvp/problem.hpp"

#include <cmath>
#include <sstream>

namespace haarbvp {

std::optional<std::string> regime_warning(const EmdenFowlerProblem& problem) {
    if (problem.gamma < -2.0 && problem.beta > 1.0) return std::nullopt;
    std::ostringstream msg;
    msg << "parameters (gamma=" << problem.gamma << ", beta=" << problem.beta
        << ") lie outside the regime gamma < -2, beta > 1";
    return msg.str();
}

double nonlinear_power(double y, double beta, PowerGuard guard) {
    if (y > 0.0) return std::pow(y, beta);
    if (y == 0.0) {
        if (beta > 0.0) return 0.0;
        if (beta == 0.0) return 1.0;
        throw NegativeBaseFractionalPower("zero base with negative exponent " +
                                          std::to_string(beta));
    }
    if (beta == std::floor(beta)) return std::pow(y, beta);
    if (guard == PowerGuard::Signed) return -std::pow(-y, beta);
    throw NegativeBaseFractionalPower("negative base " + std::to_string(y) +
                                      " with non-integer exponent " + std::to_string(beta));
}

double ode_residual(double t, double y, double ypp, const EmdenFowlerProblem& problem,
                    PowerGuard guard) {
    if (t <= 0.0) throw SingularPoint("residual undefined at t <= 0");
    return ypp + problem.sigma * std::pow(t, problem.gamma) *
                     nonlinear_power(y, problem.beta, guard);
}

double derived_dy0(const std::vector<double>& a) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * haar_integral(2, static_cast<int>(i + 1), 1.0);
    return -1.0 - s;
}

PointValues evaluate_solution(const std::vector<double>& a, double dy0, BoundaryKind bc,
                              double t) {
    const int n = static_cast<int>(a.size());
    PointValues out{0.0, 0.0, 0.0};
    double sum_p2t = 0.0, sum_p1t = 0.0, sum_ht = 0.0, sum_p2_1 = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double c = a[i - 1];
        if (c == 0.0) continue;
        sum_p2t += c * haar_integral(2, i, t);
        sum_p1t += c * haar_integral(1, i, t);
        sum_ht += c * haar_fn(i, t);
        sum_p2_1 += c * haar_integral(2, i, 1.0);
    }
    if (bc == BoundaryKind::Dirichlet) {
        const double slope0 = -1.0 - sum_p2_1;
        out.y = 1.0 - t + sum_p2t - t * sum_p2_1;
        out.yp = slope0 + sum_p1t;
        out.ypp = sum_ht;
    } else {
        out.y = 1.0 + t * dy0 + sum_p2t;
        out.yp = dy0 + sum_p1t;
        out.ypp = sum_ht;
    }
    return out;
}

double residual_norm(const SolutionGrid& sol, const EmdenFowlerProblem& problem,
                     const HaarSystem& system) {
    double sup = 0.0;
    for (double t : system.colloc) {
        const PointValues p = evaluate_solution(sol.coefficients, sol.dy0, problem.bc, t);
        const double r = std::abs(ode_residual(t, p.y, p.ypp, problem));
        if (r > sup) sup = r;
    }
    return sup;
}

double residual_sup_at(const SolutionGrid& sol, const EmdenFowlerProblem& problem,
                       const std::vector<double>& points) {
    double sup = 0.0;
    for (double t : points) {
        if (t <= 0.0) continue;
        const PointValues p = evaluate_solution(sol.coefficients, sol.dy0, problem.bc, t);
        const double r = std::abs(ode_residual(t, p.y, p.ypp, problem));
        if (r > sup) sup = r;
    }
    return sup;
}

std::vector<double> fine_grid(int count) {
    std::vector<double> pts(count);
    for (int k = 1; k <= count; ++k) pts[k - 1] = static_cast<double>(k) / count;
    return pts;
}

std::vector<double> report_grid() {
    std::vector<double> pts(9);
    for (int k = 1; k <= 9; ++k) pts[k - 1] = k * 0.1;
    return pts;
}

}  // namespace haarbvp
