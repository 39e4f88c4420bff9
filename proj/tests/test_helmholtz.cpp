#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "ballkit/calculus.hpp"
#include "ballkit/helmholtz.hpp"
#include "ballkit/spectral_ops.hpp"
#include "support.hpp"

using namespace ballkit;

namespace {

// Chebyshev U_k (= C^(1)_k) and Gegenbauer C^(2)_k by their recurrences.
double eval_c1(const std::vector<Complex>& c, double x) {
    double acc = 0.0, u0 = 1.0, u1 = 2.0 * x;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const double uk = k == 0 ? u0 : (k == 1 ? u1 : 2.0 * x * u1 - u0);
        if (k >= 2) { u0 = u1; u1 = uk; }
        acc += c[k].real() * uk;
    }
    return acc;
}

double eval_c2(const std::vector<Complex>& c, double x) {
    double acc = 0.0, g0 = 1.0, g1 = 4.0 * x;
    for (std::size_t k = 0; k < c.size(); ++k) {
        double gk;
        if (k == 0) gk = g0;
        else if (k == 1) gk = g1;
        else {
            gk = (2.0 * (k + 1.0) * x * g1 - (k + 2.0) * g0) / static_cast<double>(k);
            g0 = g1;
            g1 = gk;
        }
        acc += c[k].real() * gk;
    }
    return acc;
}

double eval_cheb(const std::vector<Complex>& c, double x) {
    double acc = 0.0, t0 = 1.0, t1 = x;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const double tk = k == 0 ? t0 : (k == 1 ? t1 : 2.0 * x * t1 - t0);
        if (k >= 2) { t0 = t1; t1 = tk; }
        acc += c[k].real() * tk;
    }
    return acc;
}

double ustar(double x, double y, double z) {
    return std::exp(x) * std::sin(y) + z * z * z;
}

} // namespace

TEST_CASE("ultraspherical ladder operators match basis recurrences") {
    // u(x) = x^5 - 0.3 x^2 + 0.5 in the T basis.
    std::vector<Complex> c(10, Complex(0.0, 0.0));
    c[0] = 0.35;
    c[1] = 0.625;
    c[2] = -0.15;
    c[3] = 0.3125;
    c[5] = 0.0625;
    const int m = static_cast<int>(c.size());

    const std::vector<Complex> s0c = ultra_S0(m).apply(c);
    const std::vector<Complex> s02c = ultra_S1(m).apply(s0c);
    const std::vector<Complex> d1c = ultra_D1(m).apply(c);
    const std::vector<Complex> d2c = ultra_D2(m).apply(c);
    const std::vector<Complex> rc = ultra_mult_r_c2(m).apply(s02c);
    const std::vector<Complex> r2c = ultra_mult_r2_c2(m).apply(s02c);

    for (double x : {-0.9, -0.3, 0.2, 0.7, 0.95}) {
        const double u = std::pow(x, 5) - 0.3 * x * x + 0.5;
        const double du = 5.0 * std::pow(x, 4) - 0.6 * x;
        const double d2u = 20.0 * std::pow(x, 3) - 0.6;
        CHECK(eval_cheb(c, x) == doctest::Approx(u).epsilon(1e-13));
        CHECK(eval_c1(s0c, x) == doctest::Approx(u).epsilon(1e-13));
        CHECK(eval_c2(s02c, x) == doctest::Approx(u).epsilon(1e-13));
        CHECK(eval_c1(d1c, x) == doctest::Approx(du).epsilon(1e-13));
        CHECK(eval_c2(d2c, x) == doctest::Approx(d2u).epsilon(1e-13));
        CHECK(eval_c2(rc, x) == doctest::Approx(x * u).epsilon(1e-13));
        CHECK(eval_c2(r2c, x) == doctest::Approx(x * x * u).epsilon(1e-13));
    }
}

TEST_CASE("harmonic polynomial with its own trace is reproduced exactly") {
    const BoundaryTrace g = trace_from_function(
        [](double x, double, double) { return x; }, Coords::cartesian, 8, 8);
    const BallScalar u = helmholtz_solve(BallScalar(), 0.0, g, 8, 8, 8);
    CHECK(u.resolved());
    for (const auto& q : oracle::random_ball_points(15)) {
        const Complex got = eval_point(u, q[0], q[1], q[2]);
        CHECK(std::abs(got - Complex(q[0], 0.0)) < 1e-12);
    }
}

TEST_CASE("dirichlet solve recovers a manufactured solution") {
    const double k2 = 7.0;
    const BallScalar f = construct(
        [&](double x, double y, double z) { return 6.0 * z + k2 * ustar(x, y, z); },
        Coords::cartesian);
    const BoundaryTrace g = trace_from_function(ustar, Coords::cartesian, 44, 40);

    const HelmholtzSolver solver(k2, 20, 44, 40, BcKind::dirichlet);
    const BallScalar u = solver.solve(f, g);
    CHECK(u.resolved());
    CHECK(is_bmc(u.coeffs(), 1e-8));
    for (const auto& q : oracle::random_ball_points(25)) {
        const Complex got = eval_point(u, q[0], q[1], q[2]);
        CHECK(std::abs(got - Complex(ustar(q[0], q[1], q[2]), 0.0)) < 1e-9);
    }

    // Residual through the independent differentiation pipeline.
    const BallScalar resid = laplacian(u) + k2 * u - f;
    for (const auto& q : oracle::random_ball_points(8, 0.85)) {
        CHECK(std::abs(eval_point(resid, q[0], q[1], q[2])) < 1e-7);
    }

    // The factored operator is reusable against new data.
    const auto u2star = [](double x, double y, double z) {
        return 1.0 - x * x - y * y - z * z;
    };
    const BallScalar f2 = construct(
        [&](double x, double y, double z) { return -6.0 + k2 * u2star(x, y, z); },
        Coords::cartesian);
    const BoundaryTrace g2 = trace_from_function(u2star, Coords::cartesian, 44, 40);
    const BallScalar u2 = solver.solve(f2, g2);
    for (const auto& q : oracle::random_ball_points(15)) {
        const Complex got = eval_point(u2, q[0], q[1], q[2]);
        CHECK(std::abs(got - Complex(u2star(q[0], q[1], q[2]), 0.0)) < 1e-10);
    }
}

TEST_CASE("neumann solve recovers a manufactured solution") {
    const double k2 = 5.0;
    const auto ustar2 = [](double x, double y, double z) {
        return ustar(x, y, z) + x * x + y * y + z * z;
    };
    const BallScalar f = construct(
        [&](double x, double y, double z) {
            return 6.0 * z + 6.0 + k2 * ustar2(x, y, z);
        },
        Coords::cartesian);
    const BoundaryTrace g = trace_from_function(
        [](double x, double y, double z) {
            return x * std::exp(x) * std::sin(y) + y * std::exp(x) * std::cos(y) +
                   3.0 * z * z * z + 2.0;
        },
        Coords::cartesian, 44, 40);

    const BallScalar u = helmholtz_solve(f, k2, g, 20, 44, 40, BcKind::neumann);
    CHECK(u.resolved());
    CHECK(is_bmc(u.coeffs(), 1e-8));
    for (const auto& q : oracle::random_ball_points(25)) {
        const Complex got = eval_point(u, q[0], q[1], q[2]);
        CHECK(std::abs(got - Complex(ustar2(q[0], q[1], q[2]), 0.0)) < 1e-8);
    }
}

TEST_CASE("oscillatory neumann problem with known closed-form solution") {
    const auto uexact = [](double x, double, double) { return std::sin(10.0 * x); };
    const BallScalar uref = construct(uexact, Coords::cartesian);

    const double k2 = 20.0;
    const BallScalar f = construct(
        [](double x, double, double) { return -80.0 * std::sin(10.0 * x); },
        Coords::cartesian);
    const int n = std::max(f.n(), uref.n()) + 8;
    const int p = std::max(f.p(), uref.p()) + 8;
    const int m = std::max(f.m(), uref.m()) + 6;
    const BoundaryTrace g = trace_from_function(
        [](double x, double, double) { return 10.0 * x * std::cos(10.0 * x); },
        Coords::cartesian, n, p);

    const BallScalar u = helmholtz_solve(f, k2, g, m, n, p, BcKind::neumann);
    CHECK(u.resolved());
    for (const auto& q : oracle::random_ball_points(25)) {
        const Complex got = eval_point(u, q[0], q[1], q[2]);
        CHECK(std::abs(got - Complex(uexact(q[0], q[1], q[2]), 0.0)) < 1e-8);
    }
}

TEST_CASE("pure neumann poisson problem is solved up to a constant") {
    const auto ustar2 = [](double x, double y, double z) {
        return ustar(x, y, z) + x * x + y * y + z * z;
    };
    const BallScalar f = construct(
        [](double, double, double z) { return 6.0 * z + 6.0; }, Coords::cartesian);
    const BoundaryTrace g = trace_from_function(
        [](double x, double y, double z) {
            return x * std::exp(x) * std::sin(y) + y * std::exp(x) * std::cos(y) +
                   3.0 * z * z * z + 2.0;
        },
        Coords::cartesian, 44, 40);

    const BallScalar u = helmholtz_solve(f, 0.0, g, 20, 44, 40, BcKind::neumann);
    CHECK(u.resolved());
    CHECK(is_bmc(u.coeffs(), 1e-8));

    const auto pts = oracle::random_ball_points(15);
    const Complex offset =
        eval_point(u, pts[0][0], pts[0][1], pts[0][2]) -
        Complex(ustar2(pts[0][0], pts[0][1], pts[0][2]), 0.0);
    for (const auto& q : pts) {
        const Complex diff = eval_point(u, q[0], q[1], q[2]) -
                             Complex(ustar2(q[0], q[1], q[2]), 0.0);
        CHECK(std::abs(diff - offset) < 1e-8);
    }
}

TEST_CASE("incompatible pure neumann data is rejected") {
    const BallScalar f = construct([](double, double, double) { return 1.0; },
                                   Coords::cartesian);
    const BoundaryTrace g = trace_from_function(
        [](double, double, double) { return 0.0; }, Coords::cartesian, 8, 8);
    CHECK_THROWS_AS(helmholtz_solve(f, 0.0, g, 12, 8, 8, BcKind::neumann), SolverError);
}

TEST_CASE("degenerate inputs") {
    const BoundaryTrace g0 = trace_from_function(
        [](double, double, double) { return 0.0; }, Coords::cartesian, 8, 8);
    const BallScalar u = helmholtz_solve(BallScalar(), 3.0, g0, 12, 8, 8);
    CHECK(u.vscale() == 0.0);
    CHECK(u.m() == 1);

    CHECK_THROWS_AS(HelmholtzSolver(1.0, 8, 8, 7, BcKind::dirichlet), InvalidSizeError);
    CHECK_THROWS_AS(HelmholtzSolver(1.0, 3, 8, 8, BcKind::dirichlet), InvalidSizeError);
}
