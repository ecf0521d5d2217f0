#include <cmath>
#include <vector>

#include "doctest.h"
#include "haarbvp/newton.hpp"
#include "haarbvp/qlm.hpp"

using namespace haarbvp;

namespace {

const EmdenFowlerProblem kEx1{-1.0, -0.5, 1.5, BoundaryKind::Dirichlet};
const EmdenFowlerProblem kEx2{-1.0, -1.0, 2.0, BoundaryKind::Dirichlet};
const EmdenFowlerProblem kEx3{-1.0, -1.25, 2.25, BoundaryKind::Dirichlet};
const EmdenFowlerProblem kEx4{-1.0, -0.5, 1.5, BoundaryKind::Robin};

double sup_diff(const std::vector<double>& u, const std::vector<double>& v) {
    double d = 0.0;
    for (size_t i = 0; i < u.size(); ++i) d = std::max(d, std::abs(u[i] - v[i]));
    return d;
}

}  // namespace

TEST_CASE("residual components at the zero expansion") {
    // y = 1 - t, so Phi_c = -t_c^{-1/2} (1 - t_c)^{3/2}
    const HaarSystem system = build_system(ResolutionConfig(0));
    const std::vector<double> phi = residual_system_dirichlet({0.0, 0.0}, kEx1, system);
    REQUIRE(phi.size() == 2);
    CHECK(phi[0] == doctest::Approx(-1.299038105676658).epsilon(1e-14));
    CHECK(phi[1] == doctest::Approx(-0.14433756729740643).epsilon(1e-14));
}

TEST_CASE("vanishing source makes the Jacobian the collocation matrix") {
    const EmdenFowlerProblem linear{0.0, -1.0, 2.0, BoundaryKind::Dirichlet};
    const HaarSystem system = build_system(ResolutionConfig(1));
    const DenseMatrix jac = jacobian_dirichlet(std::vector<double>(4, 0.3), linear, system);
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < 4; ++i) CHECK(jac(c, i) == system.H(i, c));
}

TEST_CASE("analytic Jacobians agree with central differences") {
    const HaarSystem system = build_system(ResolutionConfig(2));
    const int n = system.config.n;

    SUBCASE("two-point boundary") {
        const std::vector<double> a(n, 1.0);
        const DenseMatrix exact = jacobian_dirichlet(a, kEx1, system);
        const DenseMatrix approx = jacobian_finite_difference(a, kEx1, system, PowerGuard::Error);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) CHECK(std::abs(exact(r, c) - approx(r, c)) <= 1e-5);
    }
    SUBCASE("mixed boundary") {
        AugmentedUnknowns u{std::vector<double>(n, 1.0), 0.0};
        std::vector<double> flat = u.a;
        flat.push_back(u.dy0);
        const DenseMatrix exact = jacobian_robin(u, kEx4, system);
        const DenseMatrix approx =
            jacobian_finite_difference(flat, kEx4, system, PowerGuard::Error);
        for (int r = 0; r <= n; ++r)
            for (int c = 0; c <= n; ++c) CHECK(std::abs(exact(r, c) - approx(r, c)) <= 1e-5);
    }
}

TEST_CASE("mixed boundary row is slope-free and anchored at -1") {
    const HaarSystem system = build_system(ResolutionConfig(2));
    const int n = system.config.n;
    const AugmentedUnknowns zero{std::vector<double>(n, 0.0), 0.7};
    const std::vector<double> phi = residual_system_robin(zero, kEx4, system);
    CHECK(phi[n] == -1.0);
    const AugmentedUnknowns other{std::vector<double>(n, 0.0), -0.9};
    CHECK(residual_system_robin(other, kEx4, system)[n] == phi[n]);
}

TEST_CASE("constant-curvature problem converges in one full step") {
    // y'' - 2 = 0 is linear in the expansion, so one step is exact.
    const EmdenFowlerProblem manufactured{-2.0, 0.0, 0.0, BoundaryKind::Dirichlet};
    const HaarSystem system = build_system(ResolutionConfig(2));
    const int n = system.config.n;

    std::vector<double> a(n, 1.0);
    const std::vector<double> phi0 = residual_system_dirichlet(a, manufactured, system);
    const DenseMatrix jac = jacobian_dirichlet(a, manufactured, system);
    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = -phi0[i];
    const std::vector<double> delta = solve(jac, rhs);
    for (int i = 0; i < n; ++i) a[i] += delta[i];
    const std::vector<double> phi1 = residual_system_dirichlet(a, manufactured, system);
    double norm = 0.0;
    for (double v : phi1) norm = std::max(norm, std::abs(v));
    CHECK(norm <= 1e-12);
    CHECK(a[0] == doctest::Approx(2.0).epsilon(1e-12));
    for (int i = 1; i < n; ++i) CHECK(std::abs(a[i]) <= 1e-12);

    const SolutionGrid sol = solve_newton(manufactured, ResolutionConfig(2), NewtonSettings{});
    CHECK(sol.iterations == 1);
    for (size_t i = 0; i < sol.eval_points.size(); ++i) {
        const double t = sol.eval_points[i];
        CHECK(sol.y[i] == doctest::Approx((1 - t) * (1 - t)).epsilon(1e-12));
    }
}

TEST_CASE("converged two-point solve matches the frozen trajectory") {
    // frozen from an independent run of the same scheme
    const SolutionGrid sol = solve_newton(kEx1, ResolutionConfig(3), NewtonSettings{});
    const double frozen[9] = {0.84909398304691375, 0.72680305504950549, 0.61886679700684122,
                              0.5200410306442802,  0.42722711597577989, 0.33842109279627447,
                              0.25219745671453508, 0.16750975820043812, 0.083616521195026161};
    REQUIRE(sol.y.size() == 9);
    for (int i = 0; i < 9; ++i) CHECK(std::abs(sol.y[i] - frozen[i]) <= 1e-9);
    CHECK(sol.iterations == 3);
    const HaarSystem system = build_system(ResolutionConfig(3));
    CHECK(residual_norm(sol, kEx1, system) <= 1e-10);
}

TEST_CASE("published benchmark anchors") {
    // published converged table values
    const SolutionGrid e1 = solve_newton(kEx1, ResolutionConfig(8), NewtonSettings{});
    CHECK(std::abs(e1.y[8] - 0.0836864) <= 5e-5);  // t = 0.9
    const SolutionGrid e2 = solve_newton(kEx2, ResolutionConfig(5), NewtonSettings{});
    CHECK(std::abs(e2.y[4] - 0.387587) <= 5e-5);   // t = 0.5
}

TEST_CASE("steeper nonlinearities converge to the frozen midpoints") {
    // frozen from an independent run
    const SolutionGrid e2 = solve_newton(kEx2, ResolutionConfig(3), NewtonSettings{});
    CHECK(std::abs(e2.y[4] - 0.38768718720662365) <= 1e-9);
    const SolutionGrid e3 = solve_newton(kEx3, ResolutionConfig(3), NewtonSettings{});
    CHECK(std::abs(e3.y[4] - 0.35434749908573426) <= 1e-9);
}

TEST_CASE("mixed boundary solve matches the frozen trajectory and its slope") {
    // cross-checked against a shooting integrator
    const SolutionGrid sol = solve_newton(kEx4, ResolutionConfig(3), NewtonSettings{});
    const double frozen[9] = {0.97746891907138789, 0.98919235872731071, 1.0233847611372775,
                              1.0766740503900043,  1.1477151334236204,  1.2362097734601645,
                              1.3424932994120446,  1.467419724561003,   1.6122526070793817};
    REQUIRE(sol.y.size() == 9);
    for (int i = 0; i < 9; ++i) CHECK(std::abs(sol.y[i] - frozen[i]) <= 1e-9);
    CHECK(std::abs(sol.dy0 - -0.48604215922861865) <= 1e-9);

    const PointValues at1 = evaluate_solution(sol.coefficients, sol.dy0, BoundaryKind::Robin, 1.0);
    CHECK(std::abs(at1.yp - at1.y) <= 1e-9);
    const PointValues at0 = evaluate_solution(sol.coefficients, sol.dy0, BoundaryKind::Robin, 0.0);
    CHECK(std::abs(at0.y - 1.0) <= 1e-12);

    REQUIRE(sol.residual_sup.has_value());
    CHECK(std::abs(*sol.residual_sup - 0.10114857966580582) <= 1e-9);
}

TEST_CASE("mixed boundary residual shrinks with refinement") {
    // sup over the report grid, frozen from an independent run
    const double expected[3] = {0.10114857966580582, 0.023713193915830821,
                                0.0060208957709990685};
    const int levels[3] = {3, 5, 7};
    double previous = 1e300;
    for (int q = 0; q < 3; ++q) {
        const SolutionGrid sol =
            solve_newton(kEx4, ResolutionConfig(levels[q]), NewtonSettings{});
        REQUIRE(sol.residual_sup.has_value());
        CHECK(std::abs(*sol.residual_sup - expected[q]) <= 1e-9);
        CHECK(*sol.residual_sup < previous);
        previous = *sol.residual_sup;
    }
}

TEST_CASE("converged result agrees with the quasilinearized solver") {
    for (const EmdenFowlerProblem& p : {kEx1, kEx2, kEx3}) {
        const SolutionGrid nw = solve_newton(p, ResolutionConfig(3), NewtonSettings{});
        const SolutionGrid ql = solve_qlm(p, ResolutionConfig(3), QlmSettings{});
        CHECK(sup_diff(nw.y, ql.y) <= 1e-6);
    }
}

TEST_CASE("different starting points land on the same solution") {
    const SolutionGrid base = solve_newton(kEx1, ResolutionConfig(5), NewtonSettings{});
    SUBCASE("perturbed constant coefficients") {
        for (double g : {1.01, 1.1}) {
            NewtonSettings s;
            s.init_coeffs.assign(ResolutionConfig(5).n, g);
            const SolutionGrid sol = solve_newton(kEx1, ResolutionConfig(5), s);
            CHECK(sup_diff(sol.y, base.y) <= 1e-6);
        }
    }
    SUBCASE("curvature implied by a constant value guess") {
        const HaarSystem system = build_system(ResolutionConfig(5));
        NewtonSettings s;
        s.init_coeffs = coeffs_from_value_guess(0.5, kEx1, system);
        const SolutionGrid sol = solve_newton(kEx1, ResolutionConfig(5), s);
        CHECK(sup_diff(sol.y, base.y) <= 1e-8);
    }
}

TEST_CASE("plain undamped iteration also converges here") {
    NewtonSettings plain;
    plain.damping = 0;
    const SolutionGrid sol = solve_newton(kEx1, ResolutionConfig(3), plain);
    CHECK(std::abs(sol.y[4] - 0.42722711597577989) <= 1e-9);
}

TEST_CASE("finite-difference mode reaches the same solution") {
    NewtonSettings fd;
    fd.jacobian_mode = JacobianMode::FiniteDifference;
    const SolutionGrid sol = solve_newton(kEx1, ResolutionConfig(3), fd);
    CHECK(std::abs(sol.y[4] - 0.42722711597577989) <= 1e-8);
}

TEST_CASE("iteration cap is enforced") {
    NewtonSettings capped;
    capped.max_iter = 1;
    CHECK_THROWS_AS(solve_newton(kEx1, ResolutionConfig(3), capped), MaxIterations);
}
