#include "haarbvp/qlm.hpp"

#include <cmath>

namespace haarbvp {

std::pair<DenseMatrix, std::vector<double>> assemble(const EmdenFowlerProblem& problem,
                                                     const HaarSystem& system,
                                                     const std::vector<double>& y_r,
                                                     PowerGuard guard) {
    const int n = system.config.n;
    if (static_cast<int>(y_r.size()) != n) throw Error("assemble: iterate length mismatch");
    if (problem.bc != BoundaryKind::Dirichlet)
        throw UnsupportedBoundary("quasilinearization supports the Dirichlet case only");

    DenseMatrix a(n);
    std::vector<double> b(n);
    const double sigma = problem.sigma, beta = problem.beta;
    for (int c = 0; c < n; ++c) {
        const double t = system.colloc[c];
        const double tg = std::pow(t, problem.gamma);
        const double ypow1 = nonlinear_power(y_r[c], beta - 1.0, guard);
        const double ypow = nonlinear_power(y_r[c], beta, guard);
        const double w = sigma * beta * tg * ypow1;
        for (int i = 0; i < n; ++i)
            a(c, i) = system.H(i, c) + w * (system.P2(i, c) - t * system.p2_at_1[i]);
        b[c] = sigma * (beta - 1.0) * tg * ypow - w * (1.0 - t);
    }
    return {std::move(a), std::move(b)};
}

PointValues reconstruct(const std::vector<double>& a, const HaarSystem&, double t) {
    return evaluate_solution(a, 0.0, BoundaryKind::Dirichlet, t);
}

SolutionGrid solve_qlm(const EmdenFowlerProblem& problem, const ResolutionConfig& config,
                       const QlmSettings& settings,
                       const std::vector<double>& eval_points) {
    if (problem.bc != BoundaryKind::Dirichlet)
        throw UnsupportedBoundary("quasilinearization supports the Dirichlet case only");
    if (settings.max_iter < 1) throw Error("max_iter must be >= 1");
    if (!(settings.tol > 0.0)) throw Error("tol must be positive");

    const HaarSystem system = build_system(config);
    const int n = config.n;

    std::vector<double> y = settings.init_guess;
    if (y.empty()) y.assign(n, 0.0);
    if (static_cast<int>(y.size()) != n) throw Error("init_guess length mismatch");

    std::vector<double> coeffs(n, 0.0);
    int iterations = 0;
    for (int r = 0; r < settings.max_iter; ++r) {
        auto [a, b] = assemble(problem, system, y, settings.guard);
        coeffs = solve(std::move(a), std::move(b));
        double change = 0.0;
        for (int c = 0; c < n; ++c) {
            const double t = system.colloc[c];
            double acc = 1.0 - t;
            for (int i = 0; i < n; ++i)
                acc += coeffs[i] * (system.P2(i, c) - t * system.p2_at_1[i]);
            if (!std::isfinite(acc)) throw NonFinite("iterate diverged");
            const double d = std::abs(acc - y[c]);
            if (d > change) change = d;
            y[c] = acc;
        }
        ++iterations;
        if (change < settings.tol) break;
    }

    SolutionGrid sol;
    sol.eval_points = eval_points;
    sol.coefficients = coeffs;
    sol.dy0 = derived_dy0(coeffs);
    sol.iterations = iterations;
    sol.method_tag = MethodTag::QLM;
    sol.y.reserve(eval_points.size());
    for (double t : eval_points)
        sol.y.push_back(evaluate_solution(coeffs, sol.dy0, BoundaryKind::Dirichlet, t).y);
    return sol;
}

}  // namespace haarbvp
