// End-to-end acceptance checks: one PASS/FAIL line per numbered check, all
// tolerances pinned inline.  Unlike the unit suites these exercise whole
// pipelines (construct -> operate -> solve -> measure) at the advertised
// problem sizes and include the advertised runtime budgets.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ballkit/ball_scalar.hpp"
#include "ballkit/calculus.hpp"
#include "ballkit/demos.hpp"
#include "ballkit/helmholtz.hpp"
#include "ballkit/rotation.hpp"
#include "ballkit/transforms.hpp"
#include "ballkit/vector_field.hpp"
#include "support.hpp"

using namespace ballkit;

namespace {

int g_fails = 0;

void line(int idx, bool ok, const char* name, const std::string& detail) {
    std::printf("%s %2d  %-28s %s\n", ok ? "PASS" : "FAIL", idx, name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_fails;
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double gauss5(double x, double y, double z) {
    return std::exp(-5.0 * (x * x + y * y + z * z));
}

} // namespace

int main() {
    const double pi = std::acos(-1.0);
    const auto pts = oracle::random_ball_points(200);

    // Carried across checks so the representation checker can sweep every
    // constructed and solver-produced function at the end.
    std::vector<const BallScalar*> produced;

    // 1. integration ----------------------------------------------------------
    BallScalar x2;
    try {
        const auto t0 = std::chrono::steady_clock::now();
        x2 = construct([](double x, double, double) { return x * x; });
        const double got = sum3(x2);
        const double secs = seconds_since(t0);
        const double err = std::abs(got - 4.0 * pi / 15.0);
        line(1, err <= 1e-13 && secs < 1.0, "ball integral of x^2",
             fmt("err %.3e (tol 1e-13), %.2fs (budget 1s)", err, secs));
        produced.push_back(&x2);
    } catch (const std::exception& e) {
        line(1, false, "ball integral of x^2", e.what());
    }

    // 2. divergence theorem ---------------------------------------------------
    BallVector v2;
    try {
        const auto t0 = std::chrono::steady_clock::now();
        v2 = construct_vector([](double x, double, double) { return std::sin(x); },
                              [](double x, double y, double) { return x * y; },
                              [](double, double, double z) { return std::cos(z); });
        const double volume = sum3(div(v2));
        const double flux = oracle::sphere_integral([](double x, double y, double z) {
            return std::sin(x) * x + x * y * y + std::cos(z) * z;
        });
        const double secs = seconds_since(t0);
        const double err = std::abs(volume - flux);
        line(2, err <= 1e-12 && secs < 10.0, "divergence theorem",
             fmt("|volume-flux| %.3e (tol 1e-12), %.2fs (budget 10s)", err, secs));
    } catch (const std::exception& e) {
        line(2, false, "divergence theorem", e.what());
    }

    // 3./4. Helmholtz accuracy and convergence --------------------------------
    BallScalar u50;
    double err50 = -1.0, err20 = -1.0;
    try {
        const auto t0 = std::chrono::steady_clock::now();
        const BallScalar rhs =
            construct([](double x, double, double) { return -80.0 * std::sin(10.0 * x); });
        const auto solve_at = [&](int n) {
            const BoundaryTrace g = trace_from_function(
                [](double x, double, double) { return 10.0 * x * std::cos(10.0 * x); },
                Coords::cartesian, n, n);
            return helmholtz_solve(rhs, 20.0, g, n, n, n, BcKind::neumann);
        };
        u50 = solve_at(50);
        for (const auto& q : pts) {
            const double want = std::sin(10.0 * q[0]);
            err50 = std::max(err50, std::abs(eval_point(u50, q[0], q[1], q[2]) -
                                             Complex(want, 0.0)));
        }
        const double secs = seconds_since(t0);
        line(3, err50 <= 1e-9 && secs < 60.0, "helmholtz at n=50",
             fmt("max err %.3e (tol 1e-9), %.2fs (budget 60s)", err50, secs));
        produced.push_back(&u50);

        const BallScalar u20 = solve_at(20);
        for (const auto& q : pts) {
            const double want = std::sin(10.0 * q[0]);
            err20 = std::max(err20, std::abs(eval_point(u20, q[0], q[1], q[2]) -
                                             Complex(want, 0.0)));
        }
        line(4, err20 >= 1e4 * err50, "helmholtz convergence",
             fmt("err n=20 %.3e vs n=50 %.3e (ratio %.1e, need >= 1e4)", err20, err50,
                 err20 / err50));
    } catch (const std::exception& e) {
        line(3, false, "helmholtz at n=50", e.what());
        line(4, false, "helmholtz convergence", e.what());
    }

    // 5. pure Neumann Poisson --------------------------------------------------
    BallScalar upoisson;
    try {
        const auto ustar = [](double x, double y, double z) {
            const double r2 = x * x + y * y + z * z;
            return (1.0 - r2) * z + 0.3 * x * y;
        };
        const BallScalar f =
            construct([](double, double, double z) { return -10.0 * z; });
        const BoundaryTrace g = trace_from_function(
            [](double x, double y, double z) { return -2.0 * z + 0.6 * x * y; },
            Coords::cartesian, 12, 12);
        upoisson = helmholtz_solve(f, 0.0, g, 12, 12, 12, BcKind::neumann);
        double offset = 0.0;
        for (const auto& q : pts)
            offset += eval_point(upoisson, q[0], q[1], q[2]).real() -
                      ustar(q[0], q[1], q[2]);
        offset /= static_cast<double>(pts.size());
        double err = 0.0;
        for (const auto& q : pts)
            err = std::max(err, std::abs(eval_point(upoisson, q[0], q[1], q[2]).real() -
                                         ustar(q[0], q[1], q[2]) - offset));
        line(5, err <= 1e-9, "neumann poisson",
             fmt("max err up to gauge constant %.3e (tol 1e-9)", err));
        produced.push_back(&upoisson);
    } catch (const std::exception& e) {
        line(5, false, "neumann poisson", e.what());
    }

    // 6. rotation -------------------------------------------------------------
    BallScalar frot;
    try {
        const auto f6 = [](double x, double, double z) {
            return std::sin(5.0 * z) - x * x;
        };
        const BallScalar f = construct(f6);
        const double a = -pi / 4.0, b = pi / 2.0, c = pi / 8.0;
        frot = rotate(f, a, b, c);
        const BallScalar back = rotate(frot, -c, -b, -a);
        double err_inv = 0.0;
        for (const auto& q : pts)
            err_inv = std::max(err_inv, std::abs(eval_point(back, q[0], q[1], q[2]) -
                                                 Complex(f6(q[0], q[1], q[2]), 0.0)));

        const double alpha = 0.7;
        const BallScalar fz = rotate(f, alpha, 0.0, 0.0);
        const int m = std::max(f.m(), fz.m());
        const int n = std::max(f.n(), fz.n());
        const int p = std::max(f.p(), fz.p());
        const CffTensor F = f.coeffs().resized(m, n, p);
        const CffTensor G = fz.coeffs().resized(m, n, p);
        double err_phase = 0.0;
        for (int k = 0; k < p; ++k)
            for (int j = 0; j < n; ++j) {
                const Complex phase = std::exp(Complex(0.0, -(j - n / 2) * alpha));
                for (int i = 0; i < m; ++i)
                    err_phase = std::max(err_phase, std::abs(G(i, j, k) - F(i, j, k) * phase));
            }

        const double err_sum = std::abs(sum3(frot) - sum3(f));
        line(6,
             err_inv <= 1e-9 && err_phase <= 1e-11 && err_sum <= 1e-11, "rotation",
             fmt("inverse %.3e (1e-9), z-phase %.3e (1e-11), sum3 drift %.3e (1e-11)",
                 err_inv, err_phase, err_sum));
        produced.push_back(&frot);
    } catch (const std::exception& e) {
        line(6, false, "rotation", e.what());
    }

    // 7. poloidal/toroidal ----------------------------------------------------
    PtPotentials pt;
    try {
        const auto t0 = std::chrono::steady_clock::now();
        const BallVector seed = construct_vector(
            [](double x, double y, double z) { return z * gauss5(x, y, z) * x; },
            [](double x, double y, double z) { return z * gauss5(x, y, z) * y; },
            [](double x, double y, double z) { return z * gauss5(x, y, z) * z; });
        const BallVector v = curl(seed); // equals e^{-5 r^2} (-y, x, 0)
        pt = pt_decompose(v);
        const BallVector P = pt_to_vector(PtPotentials{pt.poloidal, BallScalar()});
        const BallVector T = pt_to_vector(PtPotentials{BallScalar(), pt.toroidal});
        const BallVector recon = add(P, T);
        double err = 0.0;
        for (const auto& q : pts) {
            const double g = gauss5(q[0], q[1], q[2]);
            const auto got = eval_vector(recon, q[0], q[1], q[2]);
            err = std::max({err, std::abs(got[0] - Complex(-q[1] * g, 0.0)),
                            std::abs(got[1] - Complex(q[0] * g, 0.0)), std::abs(got[2])});
        }
        const double cross_energy = std::abs(sum3(dot(P, T)));
        const double normP = std::sqrt(std::max(0.0, sum3(dot(P, P))));
        const double normT = std::sqrt(std::max(0.0, sum3(dot(T, T))));
        const double secs = seconds_since(t0);
        line(7, err <= 1e-8 && cross_energy <= 1e-8 * normP * normT && secs < 60.0,
             "poloidal/toroidal",
             fmt("recon %.3e (1e-8), <P,T> %.3e vs %.3e, %.2fs (budget 60s)", err,
                 cross_energy, 1e-8 * normP * normT, secs));
        produced.push_back(&pt.toroidal);
    } catch (const std::exception& e) {
        line(7, false, "poloidal/toroidal", e.what());
    }

    // 8. Helmholtz-Hodge ------------------------------------------------------
    try {
        const BallVector v = construct_vector(
            [](double x, double y, double z) { return std::cos(x * y) * z; },
            [](double x, double, double z) { return std::sin(x * z); },
            [](double, double y, double z) { return y * z; });
        const HodgeDecomposition hd = helmholtz_hodge(v);
        const BallVector recon = add(grad(hd.potential), hd.solenoidal);
        double err = 0.0;
        for (const auto& q : pts) {
            const auto got = eval_vector(recon, q[0], q[1], q[2]);
            err = std::max(
                {err,
                 std::abs(got[0] - Complex(std::cos(q[0] * q[1]) * q[2], 0.0)),
                 std::abs(got[1] - Complex(std::sin(q[0] * q[2]), 0.0)),
                 std::abs(got[2] - Complex(q[1] * q[2], 0.0))});
        }
        const double div_err = div(hd.solenoidal).vscale();
        const BoundaryTrace rn = radial_trace(hd.solenoidal);
        double normal_err = 0.0;
        for (int a = 0; a < 48; ++a)
            for (int b = 0; b <= 48; ++b)
                normal_err = std::max(
                    normal_err,
                    std::abs(rn.eval(-pi + 2.0 * pi * a / 48.0, pi * b / 48.0)));
        line(8, err <= 1e-8 && div_err <= 1e-8 && normal_err <= 1e-8, "helmholtz-hodge",
             fmt("recon %.3e, div %.3e, boundary normal %.3e (all 1e-8)", err, div_err,
                 normal_err));
        produced.push_back(&hd.potential);
    } catch (const std::exception& e) {
        line(8, false, "helmholtz-hodge", e.what());
    }

    // 9. transforms: round trip and cost scaling ------------------------------
    try {
        std::mt19937 rng(20240817);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        const auto fill = [&](CffTensor& t) {
            for (std::size_t i = 0; i < t.size(); ++i)
                t.data()[i] = Complex(u(rng), u(rng));
        };
        double rt_err = 0.0;
        for (int n : {16, 32, 64}) {
            CffTensor vals(n + 1, n, n);
            fill(vals);
            const CffTensor back = coeffs2vals(vals2coeffs(vals));
            double worst = 0.0, scale = 0.0;
            for (std::size_t i = 0; i < vals.size(); ++i) {
                worst = std::max(worst, std::abs(back.data()[i] - vals.data()[i]));
                scale = std::max(scale, std::abs(vals.data()[i]));
            }
            rt_err = std::max(rt_err, worst / scale);
        }

        const auto bench = [&](int n) {
            CffTensor a(n + 1, n, n);
            fill(a);
            (void)coeffs2vals(a); // warm any cached plans
            double best = 1e300;
            for (int rep = 0; rep < 5; ++rep) {
                const auto t0 = std::chrono::steady_clock::now();
                (void)coeffs2vals(a);
                best = std::min(best, seconds_since(t0));
            }
            return best;
        };
        const auto model = [](int n) {
            return static_cast<double>(n) * n * n * std::log2(static_cast<double>(n));
        };
        const double t16 = bench(16), t32 = bench(32), t64 = bench(64);
        const double unit = t16 / model(16);
        const bool scaling_ok =
            t32 <= 3.0 * unit * model(32) && t64 <= 3.0 * unit * model(64);
        line(9, rt_err <= 1e-13 && scaling_ok, "transform round trip",
             fmt("rel err %.3e (1e-13); t16/t32/t64 %.2e/%.2e/%.2e s (<= 3x n^3 log n fit)",
                 rt_err, t16, t32, t64));
    } catch (const std::exception& e) {
        line(9, false, "transform round trip", e.what());
    }

    // 10. operator identities -------------------------------------------------
    try {
        const BallScalar f = construct([](double x, double y, double z) {
            return std::exp(x) * std::sin(y) + z * z;
        });
        const double cg = curl(grad(f)).vscale();
        const BallVector v = construct_vector(
            [](double, double y, double) { return std::sin(y); },
            [](double x, double, double z) { return std::cos(x * z); },
            [](double x, double y, double) { return x * y; });
        const double dc = div(curl(v)).vscale();

        double fd_err = 0.0;
        const auto fxyz = [](double x, double y, double z) {
            return std::exp(x) * std::sin(y) + z * z;
        };
        for (int axis = 0; axis < 3; ++axis) {
            const BallScalar d = diff_cart(f, axis);
            for (int i = 0; i < 20; ++i) {
                const auto& q = pts[static_cast<std::size_t>(i)];
                const double want = oracle::fd_partial(fxyz, axis, q[0], q[1], q[2]);
                fd_err = std::max(fd_err,
                                  std::abs(eval_point(d, q[0], q[1], q[2]).real() - want));
            }
        }

        produced.push_back(&f);
        bool bmc_ok = true;
        for (const BallScalar* s : produced) bmc_ok = bmc_ok && is_bmc(s->coeffs(), 1e-10);
        for (int axis = 0; axis < 3; ++axis)
            bmc_ok = bmc_ok && is_bmc(v.comp(axis).coeffs(), 1e-10);

        line(10, cg <= 1e-10 && dc <= 1e-10 && fd_err <= 1e-6 && bmc_ok,
             "operator identities",
             fmt("curl grad %.3e, div curl %.3e (1e-10); fd %.3e (1e-6); structure %s",
                 cg, dc, fd_err, bmc_ok ? "ok" : "violated"));
    } catch (const std::exception& e) {
        line(10, false, "operator identities", e.what());
    }

    // 11. demos ---------------------------------------------------------------
    try {
        const auto adv = demo_advdiff(10, 30);
        const double mass0 = sum3(adv[0]);
        const double mass_scale =
            std::max(std::abs(mass0), adv[0].vscale() * 4.0 * pi / 3.0);
        double drift = 0.0;
        for (const auto& c : adv) drift = std::max(drift, std::abs(sum3(c) - mass0));

        const auto ind = demo_induction(2, 40);
        double div_b = 0.0;
        double energy_first = -1.0, energy_last = -1.0;
        for (std::size_t s = 0; s < ind.size(); ++s) {
            const BallVector b = pt_to_vector(ind[s]);
            div_b = std::max(div_b, div(b).vscale());
            const double e = sum3(dot(b, b));
            if (s == 0) energy_first = e;
            energy_last = e;
        }
        const bool energy_ok = std::isfinite(energy_last) && energy_last > 0.0 &&
                               energy_last > energy_first / 10.0 &&
                               energy_last < energy_first * 10.0;
        line(11, drift <= 1e-6 * mass_scale && div_b <= 1e-8 && energy_ok, "demos",
             fmt("mass drift %.3e (tol %.3e); max div B %.3e (1e-8); energy %.4e -> %.4e",
                 drift, 1e-6 * mass_scale, div_b, energy_first, energy_last));
    } catch (const std::exception& e) {
        line(11, false, "demos", e.what());
    }

    std::printf("%d of 11 passed\n", 11 - g_fails);
    return g_fails == 0 ? 0 : 1;
}
