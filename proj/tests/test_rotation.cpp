#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "ballkit/calculus.hpp"
#include "ballkit/rotation.hpp"
#include "support.hpp"

using namespace ballkit;

namespace {

double smooth(double x, double y, double z) {
    return std::exp(x) * std::sin(y) + z * z * z;
}

Mat3 transpose(const Mat3& R) {
    Mat3 T{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) T[r][c] = R[c][r];
    return T;
}

std::array<double, 3> apply(const Mat3& R, const std::array<double, 3>& q) {
    std::array<double, 3> out{};
    for (int r = 0; r < 3; ++r)
        out[r] = R[r][0] * q[0] + R[r][1] * q[1] + R[r][2] * q[2];
    return out;
}

} // namespace

TEST_CASE("rotation matrix entries and group properties") {
    const Mat3 E = rotation_matrix(0.0, 0.0, 0.0);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(E[r][c] == doctest::Approx(r == c ? 1.0 : 0.0).epsilon(1e-15));

    const Mat3 R = rotation_matrix(0.3, 0.7, -1.1);
    const double want[3][3] = {
        {0.63477324718897754, 0.74887824778507095, 0.19037934406737264},
        {-0.51714204473989323, 0.59480414563105211, -0.61544466355827343},
        {-0.57413154434798608, 0.29221464428477228, 0.7648421872844885},
    };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(std::abs(R[r][c] - want[r][c]) < 1e-15);

    // Orthogonality and unit determinant.
    const Mat3 RtR = [&] {
        const Mat3 T = transpose(R);
        Mat3 P{};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                for (int t = 0; t < 3; ++t) P[r][c] += T[r][t] * R[t][c];
        return P;
    }();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(std::abs(RtR[r][c] - (r == c ? 1.0 : 0.0)) < 1e-15);
    const double det = R[0][0] * (R[1][1] * R[2][2] - R[1][2] * R[2][1]) -
                       R[0][1] * (R[1][0] * R[2][2] - R[1][2] * R[2][0]) +
                       R[0][2] * (R[1][0] * R[2][1] - R[1][1] * R[2][0]);
    CHECK(std::abs(det - 1.0) < 1e-14);
}

TEST_CASE("rotation about z multiplies azimuthal modes by a pure phase") {
    const double alpha = 0.8;
    const BallScalar f = construct(smooth, Coords::cartesian);
    const BallScalar g = rotate(f, alpha, 0.0, 0.0);

    const int m = std::max(f.m(), g.m());
    const int n = std::max(f.n(), g.n());
    const int p = std::max(f.p(), g.p());
    const CffTensor F = f.coeffs().resized(m, n, p);
    const CffTensor G = g.coeffs().resized(m, n, p);
    const Complex I(0.0, 1.0);

    double worst = 0.0;
    for (int k = 0; k < p; ++k)
        for (int j = 0; j < n; ++j) {
            const double jm = j - n / 2;
            const Complex phase = std::exp(-I * (jm * alpha));
            for (int i = 0; i < m; ++i)
                worst = std::max(worst,
                                 std::abs(G(i, j, k) - F(i, j, k) * phase));
        }
    CHECK(worst < 1e-11 * f.vscale());
}

TEST_CASE("rotate agrees with evaluating at pulled-back points") {
    const double a = 0.9, b = 0.6, g = -0.4;
    const BallScalar f = construct(smooth, Coords::cartesian);
    const BallScalar fr = rotate(f, a, b, g);
    CHECK(fr.resolved());
    CHECK(is_bmc(fr.coeffs(), 1e-10));
    CHECK(fr.vscale() == doctest::Approx(f.vscale()).epsilon(0.05));

    const Mat3 Rinv = rotation_matrix(-g, -b, -a);
    for (const auto& q : oracle::random_ball_points(30)) {
        const auto qi = apply(Rinv, q);
        const Complex got = eval_point(fr, q[0], q[1], q[2]);
        const Complex want = eval_point(f, qi[0], qi[1], qi[2]);
        CHECK(std::abs(got - want) < 1e-10);
    }
}

TEST_CASE("inverse angles undo a rotation") {
    const double a = 1.2, b = 0.5, g = 2.0;
    const BallScalar f = construct(smooth, Coords::cartesian);
    const BallScalar back = rotate(rotate(f, a, b, g), -g, -b, -a);
    for (const auto& q : oracle::random_ball_points(20)) {
        const Complex got = eval_point(back, q[0], q[1], q[2]);
        CHECK(std::abs(got - Complex(smooth(q[0], q[1], q[2]), 0.0)) < 1e-9);
    }
}

TEST_CASE("rotation preserves the ball integral") {
    const BallScalar f = construct(smooth, Coords::cartesian);
    const double before = sum3(f);
    const double after = sum3(rotate(f, -0.7, 1.3, 0.25));
    CHECK(std::abs(after - before) < 1e-12 * std::max(1.0, std::abs(before)));
}

TEST_CASE("radial functions and the zero function are fixed points") {
    const BallScalar rad = construct(
        [](double x, double y, double z) { return std::exp(-2.0 * (x * x + y * y + z * z)); },
        Coords::cartesian);
    const BallScalar rot = rotate(rad, 0.4, 1.1, -0.9);
    for (const auto& q : oracle::random_ball_points(20)) {
        const Complex got = eval_point(rot, q[0], q[1], q[2]);
        const Complex want = eval_point(rad, q[0], q[1], q[2]);
        CHECK(std::abs(got - want) < 1e-11);
    }

    const BallScalar z = rotate(BallScalar(), 0.4, 1.1, -0.9);
    CHECK(z.vscale() == 0.0);
    CHECK(z.m() == 1);
    CHECK(z.n() == 2);
    CHECK(z.p() == 2);
}
