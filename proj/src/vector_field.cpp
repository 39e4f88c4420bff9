#include "ballkit/vector_field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "ballkit/helmholtz.hpp"
#include "ballkit/spectral_ops.hpp"
#include "ballkit/tensor_ops.hpp"

namespace ballkit {

namespace {

void tensor_add_inplace(CffTensor& a, const CffTensor& b) {
    for (std::size_t s = 0; s < a.size(); ++s) a.data()[s] += b.data()[s];
}

void tensor_sub_inplace(CffTensor& a, const CffTensor& b) {
    for (std::size_t s = 0; s < a.size(); ++s) a.data()[s] -= b.data()[s];
}

void tensor_negate(CffTensor& a) {
    for (Complex& z : a.data()) z = -z;
}

// Coefficient tensors of the spherical-basis components on a common shape.
struct SphComponents {
    CffTensor vr, vlam, vth;
};

SphComponents spherical_components(const BallVector& v, int m, int n, int p) {
    const CffTensor X = v.x().coeffs().resized(m, n, p);
    const CffTensor Y = v.y().coeffs().resized(m, n, p);
    const CffTensor Z = v.z().coeffs().resized(m, n, p);
    const BandedMatrix cl = fourier_mult_cos(n), sl = fourier_mult_sin(n);
    const BandedMatrix ct = fourier_mult_cos(p), st = fourier_mult_sin(p);

    // h = cos(lam) Vx + sin(lam) Vy, the horizontal part seen from the meridian
    CffTensor h = X;
    apply_along(h, cl, 1);
    {
        CffTensor t = Y;
        apply_along(t, sl, 1);
        tensor_add_inplace(h, t);
    }

    SphComponents out;
    out.vr = h;
    apply_along(out.vr, st, 2);
    {
        CffTensor t = Z;
        apply_along(t, ct, 2);
        tensor_add_inplace(out.vr, t);
    }
    out.vth = h;
    apply_along(out.vth, ct, 2);
    {
        CffTensor t = Z;
        apply_along(t, st, 2);
        tensor_sub_inplace(out.vth, t);
    }
    out.vlam = X;
    apply_along(out.vlam, sl, 1);
    tensor_negate(out.vlam);
    {
        CffTensor t = Y;
        apply_along(t, cl, 1);
        tensor_add_inplace(out.vlam, t);
    }
    return out;
}

int max_m(const BallVector& v) {
    return std::max({v.x().m(), v.y().m(), v.z().m()});
}
int max_n(const BallVector& v) {
    return std::max({v.x().n(), v.y().n(), v.z().n()});
}
int max_p(const BallVector& v) {
    return std::max({v.x().p(), v.y().p(), v.z().p()});
}

// Multiply by the Cartesian coordinate `axis` in coefficient space; the
// input tensor must already carry the padding for one extra radial degree
// and one extra mode in each angular factor involved.
CffTensor coordinate_times(const CffTensor& A, int axis) {
    CffTensor out = A;
    apply_along(out, cheb_mult_r(out.m()), 0);
    if (axis == 0) {
        apply_along(out, fourier_mult_sin(out.p()), 2);
        apply_along(out, fourier_mult_cos(out.n()), 1);
    } else if (axis == 1) {
        apply_along(out, fourier_mult_sin(out.p()), 2);
        apply_along(out, fourier_mult_sin(out.n()), 1);
    } else {
        apply_along(out, fourier_mult_cos(out.p()), 2);
    }
    return out;
}

// s * (x, y, z), built bandwise from s's coefficients.
BallVector scalar_times_position(const BallScalar& s) {
    if (s.vscale() == 0.0) return BallVector();
    const CffTensor base = s.coeffs().resized(s.m() + 2, s.n() + 2, s.p() + 2);
    std::array<BallScalar, 3> c;
    for (int axis = 0; axis < 3; ++axis)
        c[axis] = simplify(coordinate_times(base, axis), false, default_tol(), s.vscale());
    return BallVector(c[0], c[1], c[2]);
}

} // namespace

BallVector::BallVector(BallScalar x, BallScalar y, BallScalar z)
    : c_{std::move(x), std::move(y), std::move(z)} {}

const BallScalar& BallVector::comp(int axis) const {
    if (axis < 0 || axis > 2) throw DomainError("vector component axis must be 0, 1 or 2");
    return c_[static_cast<std::size_t>(axis)];
}

double BallVector::vscale() const {
    return std::max({c_[0].vscale(), c_[1].vscale(), c_[2].vscale()});
}

BallVector construct_vector(const PointFn& fx, const PointFn& fy, const PointFn& fz,
                            Coords coords, const ConstructOptions& opts) {
    return BallVector(construct(fx, coords, opts), construct(fy, coords, opts),
                      construct(fz, coords, opts));
}

std::array<Complex, 3> eval_vector(const BallVector& v, double x, double y, double z) {
    return {eval_point(v.x(), x, y, z), eval_point(v.y(), x, y, z),
            eval_point(v.z(), x, y, z)};
}

BallVector add(const BallVector& a, const BallVector& b) {
    return BallVector(add(a.x(), b.x()), add(a.y(), b.y()), add(a.z(), b.z()));
}

BallVector sub(const BallVector& a, const BallVector& b) {
    return BallVector(sub(a.x(), b.x()), sub(a.y(), b.y()), sub(a.z(), b.z()));
}

BallVector scale(const BallVector& a, double s) {
    return BallVector(scale(a.x(), s), scale(a.y(), s), scale(a.z(), s));
}

BallVector grad(const BallScalar& f) {
    return BallVector(diff_cart(f, 0), diff_cart(f, 1), diff_cart(f, 2));
}

BallScalar div(const BallVector& v) {
    return add(add(diff_cart(v.x(), 0), diff_cart(v.y(), 1)), diff_cart(v.z(), 2));
}

BallVector curl(const BallVector& v) {
    return BallVector(sub(diff_cart(v.z(), 1), diff_cart(v.y(), 2)),
                      sub(diff_cart(v.x(), 2), diff_cart(v.z(), 0)),
                      sub(diff_cart(v.y(), 0), diff_cart(v.x(), 1)));
}

BallScalar dot(const BallVector& a, const BallVector& b) {
    return add(add(mul(a.x(), b.x()), mul(a.y(), b.y())), mul(a.z(), b.z()));
}

BallVector cross(const BallVector& a, const BallVector& b) {
    return BallVector(sub(mul(a.y(), b.z()), mul(a.z(), b.y())),
                      sub(mul(a.z(), b.x()), mul(a.x(), b.z())),
                      sub(mul(a.x(), b.y()), mul(a.y(), b.x())));
}

BoundaryTrace radial_trace(const BallVector& v) {
    const int m = max_m(v);
    const int n = max_n(v) + 4;
    const int p = max_p(v) + 4;
    const SphComponents s = spherical_components(v, m, n, p);
    CffTensor g(1, n, p);
    for (int k = 0; k < p; ++k)
        for (int j = 0; j < n; ++j) {
            Complex acc(0.0, 0.0);
            for (int i = 0; i < m; ++i) acc += s.vr(i, j, k);
            g(0, j, k) = acc;
        }
    return BoundaryTrace{std::move(g)};
}

PtPotentials pt_decompose(const BallVector& v) {
    const double vmax = v.vscale();
    const BallScalar d = div(v);
    if (d.vscale() > 1e-8 * vmax) {
        std::ostringstream msg;
        msg << "pt: field is not divergence-free (|div| ~ " << d.vscale() << " vs scale "
            << vmax << ")";
        throw SolverError(msg.str());
    }
    if (vmax == 0.0) return {BallScalar(), BallScalar()};

    const int m = max_m(v) + 2;
    const int n = max_n(v) + 4;
    const int p = max_p(v) + 8;
    const SphComponents s = spherical_components(v, m, n, p);

    // Radial components of v and of curl(v), scaled by r sin^2(theta) so the
    // angular operator below is polynomial in the Fourier basis:
    //   gp = -r sin^2(th) V_r
    //   gt = -sin(th) (d_th(sin(th) V_lam) - d_lam V_th)
    const BandedMatrix st = fourier_mult_sin(p);
    CffTensor gp = s.vr;
    apply_along(gp, cheb_mult_r(m), 0);
    apply_along(gp, fourier_mult_sin2(p), 2);
    tensor_negate(gp);

    CffTensor gt = s.vlam;
    apply_along(gt, st, 2);
    scale_by_mode(gt, 2, [](int k) { return Complex(0.0, k); });
    {
        CffTensor t = s.vth;
        scale_by_mode(t, 1, [](int j) { return Complex(0.0, j); });
        tensor_sub_inplace(gt, t);
    }
    apply_along(gt, st, 2);
    tensor_negate(gt);

    // Solve sin^2(th) Lap_sphere u = g one theta line at a time.  The
    // azimuthal mean is defined only up to a theta-constant per shell
    // (adding f(r) to a potential changes nothing), fixed by pinning the
    // constant polar mode to zero.
    const BandedMatrix dth = fourier_deriv(p);
    const BandedMatrix a0 =
        fourier_mult_sin2(p).times(dth.times(dth)).plus(fourier_mult_sincos(p).times(dth));
    CffTensor phi(m, n, p), psi(m, n, p);
    std::vector<Complex> line(static_cast<std::size_t>(p));
    for (int j = 0; j < n; ++j) {
        const int jm = j - n / 2;
        BandedMatrix a = a0.shifted(Complex(-static_cast<double>(jm) * jm, 0.0));
        if (jm == 0) {
            const int r0 = p / 2;
            for (int c = std::max(0, r0 - 2); c <= std::min(p - 1, r0 + 2); ++c)
                a.at(r0, c) = Complex(0.0, 0.0);
            a.at(r0, r0) = Complex(1.0, 0.0);
        }
        const BandedLU lu(a);
        for (int i = 0; i < m; ++i) {
            for (int k = 0; k < p; ++k) line[static_cast<std::size_t>(k)] = gp(i, j, k);
            if (jm == 0) line[static_cast<std::size_t>(p / 2)] = Complex(0.0, 0.0);
            lu.solve_inplace(line.data());
            for (int k = 0; k < p; ++k) phi(i, j, k) = line[static_cast<std::size_t>(k)];

            for (int k = 0; k < p; ++k) line[static_cast<std::size_t>(k)] = gt(i, j, k);
            if (jm == 0) line[static_cast<std::size_t>(p / 2)] = Complex(0.0, 0.0);
            lu.solve_inplace(line.data());
            for (int k = 0; k < p; ++k) psi(i, j, k) = line[static_cast<std::size_t>(k)];
        }
    }

    PtPotentials parts;
    parts.poloidal = simplify(phi, false, default_tol(), vmax);
    parts.toroidal = simplify(psi, false, default_tol(), vmax);
    return parts;
}

BallVector pt_to_vector(const PtPotentials& parts) {
    const BallVector t = curl(scalar_times_position(parts.toroidal));
    const BallVector p = curl(curl(scalar_times_position(parts.poloidal)));
    return add(p, t);
}

HodgeDecomposition helmholtz_hodge(const BallVector& v) {
    const BallScalar d = div(v);
    if (v.vscale() == 0.0) return {BallScalar(), BallVector()};

    const int m = std::max({max_m(v), d.m(), 2}) + 2;
    const int n = std::max(max_n(v), d.n()) + 4;
    const int p = std::max(max_p(v), d.p()) + 4;
    const BoundaryTrace bc = radial_trace(v);

    HodgeDecomposition out;
    out.potential = helmholtz_solve(d, 0.0, bc, m, n, p, BcKind::neumann);
    out.solenoidal = sub(v, grad(out.potential));
    return out;
}

} // namespace ballkit
