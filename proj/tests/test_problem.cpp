#include <cmath>
#include <vector>

#include "doctest.h"
#include "haarbvp/problem.hpp"

using namespace haarbvp;

TEST_CASE("guarded power evaluation") {
    // 0.25^1.5 = (1/4)^(3/2) = 1/8
    CHECK(nonlinear_power(0.25, 1.5) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(nonlinear_power(4.0, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(nonlinear_power(0.7, 1.0) == 0.7);
    CHECK(nonlinear_power(0.0, 2.5) == 0.0);
    CHECK(nonlinear_power(0.0, 0.0) == 1.0);
    CHECK_THROWS_AS(nonlinear_power(0.0, -1.0), NegativeBaseFractionalPower);
    CHECK(nonlinear_power(-2.0, 3.0) == -8.0);
    CHECK(nonlinear_power(-2.0, 2.0) == 4.0);
    CHECK_THROWS_AS(nonlinear_power(-0.5, 1.5), NegativeBaseFractionalPower);
    CHECK(nonlinear_power(-0.25, 1.5, PowerGuard::Signed) ==
          doctest::Approx(-0.125).epsilon(1e-15));
}

TEST_CASE("pointwise residual") {
    const EmdenFowlerProblem p{-1.0, -0.5, 1.5, BoundaryKind::Dirichlet};
    // 0.25^-0.5 = 2, 0.64^1.5 = 0.512, so R = 1 - 2*0.512
    CHECK(ode_residual(0.25, 0.64, 1.0, p) == doctest::Approx(-0.024).epsilon(1e-14));
    CHECK_THROWS_AS(ode_residual(0.0, 1.0, 0.0, p), SingularPoint);
    CHECK_THROWS_AS(ode_residual(-0.1, 1.0, 0.0, p), SingularPoint);
}

TEST_CASE("regime flagging") {
    CHECK(!regime_warning({-1.0, -2.5, 1.5, BoundaryKind::Dirichlet}));
    CHECK(regime_warning({-1.0, -0.5, 1.5, BoundaryKind::Dirichlet}).has_value());
    CHECK(regime_warning({-1.0, -2.5, 0.5, BoundaryKind::Dirichlet}).has_value());
    CHECK(regime_warning({-1.0, -2.0, 2.0, BoundaryKind::Dirichlet}).has_value());
}

TEST_CASE("reconstruction with zero coefficients is the boundary interpolant") {
    const std::vector<double> zeros(4, 0.0);
    const PointValues d = evaluate_solution(zeros, 0.0, BoundaryKind::Dirichlet, 0.3);
    CHECK(d.y == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(d.yp == -1.0);
    CHECK(d.ypp == 0.0);
    const PointValues r = evaluate_solution(zeros, 0.5, BoundaryKind::Robin, 0.4);
    CHECK(r.y == doctest::Approx(1.2).epsilon(1e-15));
    CHECK(r.yp == 0.5);
    CHECK(r.ypp == 0.0);
}

TEST_CASE("constant curvature reconstructs the parabola (1-t)^2") {
    // y'' = 2 with y(0)=1, y(1)=0 is (1-t)^2; its expansion is a = (2, 0, ...).
    std::vector<double> a(8, 0.0);
    a[0] = 2.0;
    CHECK(derived_dy0(a) == doctest::Approx(-2.0).epsilon(1e-15));
    for (double t : {0.1, 0.35, 0.6, 0.95}) {
        const PointValues p = evaluate_solution(a, 0.0, BoundaryKind::Dirichlet, t);
        CHECK(p.y == doctest::Approx((1 - t) * (1 - t)).epsilon(1e-14));
        CHECK(p.yp == doctest::Approx(2 * t - 2).epsilon(1e-14));
        CHECK(p.ypp == 2.0);
    }
}

TEST_CASE("exact solution makes the residual vanish everywhere") {
    // y'' - 2 = 0 written as sigma=-2, gamma=0, beta=0.
    const EmdenFowlerProblem p{-2.0, 0.0, 0.0, BoundaryKind::Dirichlet};
    SolutionGrid sol;
    sol.coefficients.assign(8, 0.0);
    sol.coefficients[0] = 2.0;
    const HaarSystem system = build_system(ResolutionConfig(2));
    CHECK(residual_norm(sol, p, system) <= 1e-12);
    CHECK(residual_sup_at(sol, p, fine_grid()) <= 1e-12);
}

TEST_CASE("evaluation grids") {
    const std::vector<double> rep = report_grid();
    REQUIRE(rep.size() == 9);
    CHECK(rep.front() == 0.1);
    CHECK(rep.back() == 0.9);
    const std::vector<double> fine = fine_grid(1000);
    REQUIRE(fine.size() == 1000);
    CHECK(fine.front() == 0.001);
    CHECK(fine.back() == 1.0);
}
