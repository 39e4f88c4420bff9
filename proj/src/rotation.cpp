#include "ballkit/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ballkit/grid.hpp"
#include "ballkit/transforms.hpp"
#include "adapt.hpp"
#include "clenshaw.hpp"

namespace ballkit {

namespace {

const Complex I(0.0, 1.0);

Mat3 mul3(const Mat3& A, const Mat3& B) {
    Mat3 C{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            double s = 0.0;
            for (int t = 0; t < 3; ++t) s += A[r][t] * B[t][c];
            C[r][c] = s;
        }
    return C;
}

Mat3 about_z(double t) {
    const double c = std::cos(t), s = std::sin(t);
    return {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

Mat3 about_x(double t) {
    const double c = std::cos(t), s = std::sin(t);
    return {{{1.0, 0.0, 0.0}, {0.0, c, -s}, {0.0, s, c}}};
}

// Angular coefficients of f restricted to the shell of radius r:
// B[j + n k] = sum_i alpha_{ijk} T_i(r).
std::vector<Complex> shell_slab(const CffTensor& A, double r) {
    const int m = A.m(), n = A.n(), p = A.p();
    std::vector<Complex> B(static_cast<std::size_t>(n) * p);
    const Complex* base = A.data().data();
    for (int k = 0; k < p; ++k)
        for (int j = 0; j < n; ++j)
            B[static_cast<std::size_t>(j) + static_cast<std::size_t>(n) * k] =
                detail::cheb_clenshaw(base + static_cast<std::size_t>(m) *
                                                 (static_cast<std::size_t>(j) +
                                                  static_cast<std::size_t>(n) * k),
                                      m, 1, r);
    return B;
}

// Double Fourier sum of a slab at one angular point, with the unit
// twiddles wl = e^{i lam}, wt = e^{i th} and the mode-offset phases
// pl = e^{-i (n/2) lam}, pt = e^{-i (p/2) th} precomputed.
Complex slab_eval(const Complex* B, int n, int p, Complex wl, Complex pl, Complex wt,
                  Complex pt) {
    Complex acc(0.0, 0.0);
    for (int k = p - 1; k >= 0; --k) {
        const Complex* line = B + static_cast<std::size_t>(n) * k;
        Complex row(0.0, 0.0);
        for (int j = n - 1; j >= 0; --j) row = row * wl + line[j];
        acc = acc * wt + row;
    }
    return acc * pl * pt;
}

struct SampledLevel {
    CffTensor coeffs;
    double vscale = 0.0;
};

// Sample f(Rinv q) on the half grid for sizes (m, n, p).  A rigid
// rotation preserves radius, so the pulled-back angles of a grid node
// depend only on its angular indices; each shell then reuses one radial
// contraction of f for every angular node.
SampledLevel sample_rotated(const CffTensor& F, const Mat3& Rinv, int m, int n, int p) {
    const SampleGrid g = make_grid(m, n, p);
    const int hr = static_cast<int>(g.radii.size());
    const int ht = static_cast<int>(g.thetas.size());
    const int nf = F.n(), pf = F.p();

    const std::size_t npts = static_cast<std::size_t>(n) * ht;
    std::vector<Complex> wl(npts), pl(npts), wt(npts), pt(npts);
    for (int c = 0; c < ht; ++c) {
        const double st = std::sin(g.thetas[c]), ct = std::cos(g.thetas[c]);
        for (int b = 0; b < n; ++b) {
            const double u0 = std::cos(g.lambdas[b]) * st;
            const double u1 = std::sin(g.lambdas[b]) * st;
            const double v0 = Rinv[0][0] * u0 + Rinv[0][1] * u1 + Rinv[0][2] * ct;
            const double v1 = Rinv[1][0] * u0 + Rinv[1][1] * u1 + Rinv[1][2] * ct;
            const double v2 = Rinv[2][0] * u0 + Rinv[2][1] * u1 + Rinv[2][2] * ct;
            const double lam = std::atan2(v1, v0);
            const double th = std::atan2(std::hypot(v0, v1), v2);
            const std::size_t t = static_cast<std::size_t>(b) + static_cast<std::size_t>(n) * c;
            wl[t] = std::exp(I * lam);
            pl[t] = std::exp(-I * (static_cast<double>(nf / 2) * lam));
            wt[t] = std::exp(I * th);
            pt[t] = std::exp(-I * (static_cast<double>(pf / 2) * th));
        }
    }

    CffTensor half(hr, n, ht);
    double vscale = 0.0;
    for (int i = 0; i < hr; ++i) {
        const std::vector<Complex> slab = shell_slab(F, g.radii[i]);
        for (int c = 0; c < ht; ++c)
            for (int b = 0; b < n; ++b) {
                const std::size_t t =
                    static_cast<std::size_t>(b) + static_cast<std::size_t>(n) * c;
                const Complex v = slab_eval(slab.data(), nf, pf, wl[t], pl[t], wt[t], pt[t]);
                half(i, b, c) = v;
                vscale = std::max(vscale, std::abs(v));
            }
    }

    SampledLevel out;
    out.coeffs = vals2coeffs(double_samples(g, half));
    out.vscale = vscale;
    return out;
}

} // namespace

Mat3 rotation_matrix(double alpha, double beta, double gamma) {
    return mul3(about_z(alpha), mul3(about_x(beta), about_z(gamma)));
}

BallScalar rotate(const BallScalar& f, double alpha, double beta, double gamma,
                  const ConstructOptions& opts) {
    if (f.vscale() == 0.0) return BallScalar();
    const Mat3 Rinv = rotation_matrix(-gamma, -beta, -alpha);
    const CffTensor& F = f.coeffs();

    // A rotation cannot lower the radial bandwidth and mixes the two
    // angular directions, so start the refinement where f already is.
    const int amax = std::max(F.n(), F.p());
    int lr = detail::radial_level_holding(F.m(), opts.max_level_radial);
    int ll = detail::lambda_level_holding(amax, opts.max_level_lambda);
    int lt = detail::theta_level_holding(amax, opts.max_level_theta);

    for (;;) {
        const int m = detail::radial_size(lr);
        const int n = detail::lambda_size(ll);
        const int p = detail::theta_size(lt);
        SampledLevel s = sample_rotated(F, Rinv, m, n, p);
        const ResolutionReport rep = resolution_report(s.coeffs, s.vscale, opts.tol);
        if (rep.converged)
            return BallScalar(s.coeffs.resized(rep.trim_m(), rep.trim_n(), rep.trim_p()),
                              true, rep.vscale);

        bool grew = false;
        if (!rep.radial_ok && lr < opts.max_level_radial) { ++lr; grew = true; }
        if (!rep.lambda_ok && ll < opts.max_level_lambda) { ++ll; grew = true; }
        if (!rep.theta_ok && lt < opts.max_level_theta) { ++lt; grew = true; }
        if (!grew)
            throw UnresolvedError("rotate: rotated function unresolved at the size cap (" +
                                      std::to_string(m) + " x " + std::to_string(n) +
                                      " x " + std::to_string(p) + ")",
                                  rep);
    }
}

} // namespace ballkit
