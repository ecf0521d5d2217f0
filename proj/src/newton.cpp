#include "haarbvp/newton.hpp"

#include <cmath>
#include <utility>

namespace haarbvp {

namespace {

std::vector<double> dirichlet_values(const std::vector<double>& a, const HaarSystem& system) {
    const int n = system.config.n;
    std::vector<double> y(n);
    for (int c = 0; c < n; ++c) {
        const double t = system.colloc[c];
        double acc = 1.0 - t;
        for (int i = 0; i < n; ++i) acc += a[i] * (system.P2(i, c) - t * system.p2_at_1[i]);
        y[c] = acc;
    }
    return y;
}

std::vector<double> robin_values(const AugmentedUnknowns& u, const HaarSystem& system) {
    const int n = system.config.n;
    std::vector<double> y(n);
    for (int c = 0; c < n; ++c) {
        const double t = system.colloc[c];
        double acc = 1.0 + t * u.dy0;
        for (int i = 0; i < n; ++i) acc += u.a[i] * system.P2(i, c);
        y[c] = acc;
    }
    return y;
}

double sup_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) {
        const double a = std::abs(x);
        if (a > s) s = a;
    }
    return s;
}

bool finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace

std::vector<double> residual_system_dirichlet(const std::vector<double>& a,
                                              const EmdenFowlerProblem& problem,
                                              const HaarSystem& system, PowerGuard guard) {
    const int n = system.config.n;
    const std::vector<double> y = dirichlet_values(a, system);
    std::vector<double> phi(n);
    for (int c = 0; c < n; ++c) {
        const double t = system.colloc[c];
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += a[i] * system.H(i, c);
        phi[c] = acc + problem.sigma * std::pow(t, problem.gamma) *
                           nonlinear_power(y[c], problem.beta, guard);
    }
    return phi;
}

DenseMatrix jacobian_dirichlet(const std::vector<double>& a, const EmdenFowlerProblem& problem,
                               const HaarSystem& system, PowerGuard guard) {
    const int n = system.config.n;
    const std::vector<double> y = dirichlet_values(a, system);
    DenseMatrix jac(n);
    for (int c = 0; c < n; ++c) {
        const double t = system.colloc[c];
        const double w = problem.sigma * problem.beta * std::pow(t, problem.gamma) *
                         nonlinear_power(y[c], problem.beta - 1.0, guard);
        for (int i = 0; i < n; ++i)
            jac(c, i) = system.H(i, c) + w * (system.P2(i, c) - t * system.p2_at_1[i]);
    }
    return jac;
}

std::vector<double> residual_system_robin(const AugmentedUnknowns& u,
                                          const EmdenFowlerProblem& problem,
                                          const HaarSystem& system, PowerGuard guard) {
    const int n = system.config.n;
    const std::vector<double> y = robin_values(u, system);
    std::vector<double> phi(n + 1);
    for (int c = 0; c < n; ++c) {
        const double t = system.colloc[c];
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += u.a[i] * system.H(i, c);
        phi[c] = acc + problem.sigma * std::pow(t, problem.gamma) *
                           nonlinear_power(y[c], problem.beta, guard);
    }
    double bc = -1.0;
    for (int i = 0; i < n; ++i) bc += u.a[i] * (system.p1_at_1[i] - system.p2_at_1[i]);
    phi[n] = bc;
    return phi;
}

DenseMatrix jacobian_robin(const AugmentedUnknowns& u, const EmdenFowlerProblem& problem,
                           const HaarSystem& system, PowerGuard guard) {
    const int n = system.config.n;
    const std::vector<double> y = robin_values(u, system);
    DenseMatrix jac(n + 1);
    for (int c = 0; c < n; ++c) {
        const double t = system.colloc[c];
        const double w = problem.sigma * problem.beta * std::pow(t, problem.gamma) *
                         nonlinear_power(y[c], problem.beta - 1.0, guard);
        for (int i = 0; i < n; ++i) jac(c, i) = system.H(i, c) + w * system.P2(i, c);
        jac(c, n) = w * t;
    }
    for (int i = 0; i < n; ++i) jac(n, i) = system.p1_at_1[i] - system.p2_at_1[i];
    jac(n, n) = 0.0;
    return jac;
}

DenseMatrix jacobian_finite_difference(const std::vector<double>& unknowns,
                                       const EmdenFowlerProblem& problem,
                                       const HaarSystem& system, PowerGuard guard, double h) {
    const int n = system.config.n;
    const bool robin = problem.bc == BoundaryKind::Robin;
    const int dim = robin ? n + 1 : n;
    if (static_cast<int>(unknowns.size()) != dim)
        throw Error("jacobian_finite_difference: unknown vector length mismatch");

    auto eval = [&](const std::vector<double>& u) {
        if (robin) {
            AugmentedUnknowns aug{std::vector<double>(u.begin(), u.begin() + n), u[n]};
            return residual_system_robin(aug, problem, system, guard);
        }
        return residual_system_dirichlet(u, problem, system, guard);
    };

    DenseMatrix jac(dim);
    std::vector<double> probe = unknowns;
    for (int col = 0; col < dim; ++col) {
        probe[col] = unknowns[col] + h;
        const std::vector<double> plus = eval(probe);
        probe[col] = unknowns[col] - h;
        const std::vector<double> minus = eval(probe);
        probe[col] = unknowns[col];
        for (int r = 0; r < dim; ++r) jac(r, col) = (plus[r] - minus[r]) / (2.0 * h);
    }
    return jac;
}

std::vector<double> coeffs_from_value_guess(double value, const EmdenFowlerProblem& problem,
                                            const HaarSystem& system, PowerGuard guard) {
    const int n = system.config.n;
    DenseMatrix ht(n);
    std::vector<double> ypp(n);
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < n; ++i) ht(c, i) = system.H(i, c);
        ypp[c] = -problem.sigma * std::pow(system.colloc[c], problem.gamma) *
                 nonlinear_power(value, problem.beta, guard);
    }
    return solve(std::move(ht), std::move(ypp));
}

SolutionGrid solve_newton(const EmdenFowlerProblem& problem, const ResolutionConfig& config,
                          const NewtonSettings& settings,
                          const std::vector<double>& eval_points) {
    if (settings.max_iter < 1) throw Error("max_iter must be >= 1");
    if (!(settings.tol > 0.0)) throw Error("tol must be positive");

    const HaarSystem system = build_system(config);
    const int n = config.n;
    const bool robin = problem.bc == BoundaryKind::Robin;
    const int dim = robin ? n + 1 : n;

    std::vector<double> u(dim, 1.0);
    if (robin) u[n] = 0.0;
    if (!settings.init_coeffs.empty()) {
        if (static_cast<int>(settings.init_coeffs.size()) != n)
            throw Error("init_coeffs length mismatch");
        for (int i = 0; i < n; ++i) u[i] = settings.init_coeffs[i];
    }

    auto eval = [&](const std::vector<double>& v) {
        if (robin) {
            AugmentedUnknowns aug{std::vector<double>(v.begin(), v.begin() + n), v[n]};
            return residual_system_robin(aug, problem, system, settings.guard);
        }
        return residual_system_dirichlet(v, problem, system, settings.guard);
    };
    auto jac_at = [&](const std::vector<double>& v) {
        if (settings.jacobian_mode == JacobianMode::FiniteDifference)
            return jacobian_finite_difference(v, problem, system, settings.guard);
        if (robin) {
            AugmentedUnknowns aug{std::vector<double>(v.begin(), v.begin() + n), v[n]};
            return jacobian_robin(aug, problem, system, settings.guard);
        }
        return jacobian_dirichlet(v, problem, system, settings.guard);
    };

    std::vector<double> phi = eval(u);
    if (!finite(phi)) throw NonFinite("residual not finite at the initial guess");
    double norm = sup_norm(phi);

    int iterations = 0;
    while (norm >= settings.tol) {
        if (iterations >= settings.max_iter)
            throw MaxIterations("no convergence after " + std::to_string(settings.max_iter) +
                                " Newton steps, ||Phi|| = " + std::to_string(norm));
        std::vector<double> rhs(dim);
        for (int r = 0; r < dim; ++r) rhs[r] = -phi[r];
        const std::vector<double> delta = solve(jac_at(u), std::move(rhs));

        if (settings.damping == 0) {
            for (int r = 0; r < dim; ++r) u[r] += delta[r];
            phi = eval(u);
            if (!finite(phi)) throw NonFinite("residual diverged");
            norm = sup_norm(phi);
            ++iterations;
            continue;
        }

        bool accepted = false;
        double scale = 1.0;
        for (int k = 0; k <= settings.damping; ++k, scale *= 0.5) {
            std::vector<double> trial(dim);
            for (int r = 0; r < dim; ++r) trial[r] = u[r] + scale * delta[r];
            std::vector<double> phi_trial;
            try {
                phi_trial = eval(trial);
            } catch (const NegativeBaseFractionalPower&) {
                continue;  // inadmissible step, halve further
            }
            if (!finite(phi_trial)) continue;
            const double trial_norm = sup_norm(phi_trial);
            if (trial_norm < norm) {
                u = std::move(trial);
                phi = std::move(phi_trial);
                norm = trial_norm;
                accepted = true;
                break;
            }
        }
        if (!accepted)
            throw DampingExhausted("no admissible decrease within " +
                                   std::to_string(settings.damping) + " halvings");
        ++iterations;
    }

    SolutionGrid sol;
    sol.eval_points = eval_points;
    sol.coefficients.assign(u.begin(), u.begin() + n);
    sol.dy0 = robin ? u[n] : derived_dy0(sol.coefficients);
    sol.iterations = iterations;
    sol.method_tag = MethodTag::NEWTON;
    const BoundaryKind bc = problem.bc;
    sol.y.reserve(eval_points.size());
    for (double t : eval_points)
        sol.y.push_back(evaluate_solution(sol.coefficients, sol.dy0, bc, t).y);
    if (robin) sol.residual_sup = residual_sup_at(sol, problem, eval_points);
    return sol;
}

}  // namespace haarbvp
