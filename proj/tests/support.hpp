#pragma once

// Shared oracle helpers for the test suite.  Everything here is computed
// independently of the library internals (no transforms, no Clenshaw): the
// point is to cross-check the spectral code against brute force.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "ballkit/cff_tensor.hpp"

namespace oracle {

using ballkit::Complex;

inline double pi() { return std::acos(-1.0); }

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(pi() * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

// Integral of f over the unit ball by tensor quadrature: Gauss-Legendre in
// r, Gauss-Legendre in t = cos(theta), trapezoid (periodic) in lambda.
inline double ball_integral(const std::function<double(double, double, double)>& f_xyz,
                            int nr = 120, int nt = 120, int nl = 240) {
    std::vector<double> xr, wr, xt, wt;
    gauss_legendre(nr, xr, wr);
    gauss_legendre(nt, xt, wt);
    double total = 0.0;
    for (int a = 0; a < nr; ++a) {
        const double r = 0.5 * (xr[a] + 1.0); // map to [0,1]
        const double wa = 0.5 * wr[a] * r * r;
        for (int b = 0; b < nt; ++b) {
            const double ct = xt[b];
            const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
            double ring = 0.0;
            for (int c = 0; c < nl; ++c) {
                const double lam = 2.0 * pi() * c / nl - pi();
                ring += f_xyz(r * st * std::cos(lam), r * st * std::sin(lam), r * ct);
            }
            total += wa * wt[b] * ring * (2.0 * pi() / nl);
        }
    }
    return total;
}

// Integral of g over the unit sphere.
inline double sphere_integral(const std::function<double(double, double, double)>& g_xyz,
                              int nt = 200, int nl = 400) {
    std::vector<double> xt, wt;
    gauss_legendre(nt, xt, wt);
    double total = 0.0;
    for (int b = 0; b < nt; ++b) {
        const double ct = xt[b];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        double ring = 0.0;
        for (int c = 0; c < nl; ++c) {
            const double lam = 2.0 * pi() * c / nl - pi();
            ring += g_xyz(st * std::cos(lam), st * std::sin(lam), ct);
        }
        total += wt[b] * ring * (2.0 * pi() / nl);
    }
    return total;
}

// Brute-force evaluation of a coefficient tensor: plain triple sum with
// explicit cos/exp basis functions.
inline Complex brute_eval(const ballkit::CffTensor& A, double r, double lam, double th) {
    const int m = A.m(), n = A.n(), p = A.p();
    Complex acc(0.0, 0.0);
    const double t = std::acos(std::min(1.0, std::max(-1.0, r)));
    for (int k = 0; k < p; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i) {
                const double Ti = std::cos(i * t);
                const Complex ej = std::exp(Complex(0.0, (j - n / 2) * lam));
                const Complex ek = std::exp(Complex(0.0, (k - p / 2) * th));
                acc += A(i, j, k) * Ti * ej * ek;
            }
    return acc;
}

// Central finite difference of a trivariate function.
inline double fd_partial(const std::function<double(double, double, double)>& f, int axis,
                         double x, double y, double z, double h = 1e-5) {
    double d[3] = {0.0, 0.0, 0.0};
    d[axis] = h;
    return (f(x + d[0], y + d[1], z + d[2]) - f(x - d[0], y - d[1], z - d[2])) / (2.0 * h);
}

// Deterministic random points strictly inside the ball.
inline std::vector<std::array<double, 3>> random_ball_points(int count, double rmax = 0.95,
                                                             unsigned seed = 20240817) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::array<double, 3>> pts;
    while (static_cast<int>(pts.size()) < count) {
        const double x = u(rng), y = u(rng), z = u(rng);
        if (x * x + y * y + z * z <= rmax * rmax) pts.push_back({x, y, z});
    }
    return pts;
}

} // namespace oracle
