#include "ballkit/helmholtz.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ballkit/spectral_ops.hpp"
#include "ballkit/tensor_ops.hpp"

namespace ballkit {

namespace {

using SpMat = Eigen::SparseMatrix<Complex>;
using SpLU = Eigen::SparseLU<SpMat>;
using DenseMat = Eigen::MatrixXcd;
using DenseVec = Eigen::VectorXcd;

double bc_plus(BcKind kind, int i) {
    return kind == BcKind::dirichlet ? 1.0 : static_cast<double>(i) * i;
}

double bc_minus(BcKind kind, int i) {
    const double sign = i % 2 == 0 ? 1.0 : -1.0;
    return kind == BcKind::dirichlet ? sign : -sign * static_cast<double>(i) * i;
}

} // namespace

struct HelmholtzSolver::Impl {
    double k2;
    int m, n, p;
    BcKind kind;

    BandedMatrix s02;     // T -> C^(2) conversion
    BandedMatrix mult_r;  // r * in the T basis (for right-hand sides)

    // One factorization per azimuthal mode slot.
    std::vector<std::unique_ptr<SpLU>> mode_lu;

    // Pure Neumann Laplace: the azimuthal mean decouples per Legendre
    // degree into dense radial systems (the degree-0 one carries the
    // gauge row).
    bool mean_on_legendre = false;
    std::vector<Eigen::PartialPivLU<DenseMat>> degree_lu;

    Impl(double k2_, int m_, int n_, int p_, BcKind kind_)
        : k2(k2_), m(m_), n(n_), p(p_), kind(kind_), s02(1, 0, 0), mult_r(1, 0, 0) {
        if (m < 4 || n < 2 || p < 4 || n % 2 != 0 || p % 2 != 0)
            throw InvalidSizeError("helmholtz: sizes must satisfy m >= 4 and even "
                                   "n >= 2, p >= 4");

        const BandedMatrix d1 = ultra_D1(m), d2 = ultra_D2(m);
        const BandedMatrix s0 = ultra_S0(m), s1 = ultra_S1(m);
        const BandedMatrix mr = ultra_mult_r_c2(m), mr2 = ultra_mult_r2_c2(m);
        s02 = s1.times(s0);
        mult_r = cheb_mult_r(m);

        // Radial side of r^2 sin^2(theta) (lap + k2): maps T to C^(2).
        BandedMatrix lr = mr2.times(d2).plus(mr.times(s1.times(d1)).scaled(2.0));
        if (k2 != 0.0) lr = lr.plus(mr2.times(s02).scaled(k2));

        // Polar side without the -j^2 shift.
        const BandedMatrix dth = fourier_deriv(p);
        const BandedMatrix msin2 = fourier_mult_sin2(p);
        const BandedMatrix lth0 =
            msin2.times(dth.times(dth)).plus(fourier_mult_sincos(p).times(dth));

        mean_on_legendre = (k2 == 0.0 && kind == BcKind::neumann);

        mode_lu.resize(static_cast<std::size_t>(n));
        const int rows = m * p;
        std::vector<Eigen::Triplet<Complex>> trip;
        for (int j = 0; j < n; ++j) {
            const double jm = j - n / 2;
            if (mean_on_legendre && jm == 0.0) continue;
            const BandedMatrix lth = lth0.shifted(Complex(-jm * jm, 0.0));

            trip.clear();
            for (int k = 0; k < p; ++k) {
                for (int kk = std::max(0, k - 2); kk <= std::min(p - 1, k + 2); ++kk) {
                    const Complex ws = msin2.get(k, kk);
                    if (ws != Complex(0.0, 0.0))
                        for (int i = 0; i + 2 < m; ++i)
                            for (int ii = std::max(0, i - lr.lower());
                                 ii <= std::min(m - 1, i + lr.upper()); ++ii) {
                                const Complex v = lr.get(i, ii);
                                if (v != Complex(0.0, 0.0))
                                    trip.emplace_back(k * m + i, kk * m + ii, ws * v);
                            }
                    const Complex wt = lth.get(k, kk);
                    if (wt != Complex(0.0, 0.0))
                        for (int i = 0; i + 2 < m; ++i)
                            for (int ii = i; ii <= std::min(m - 1, i + s02.upper()); ++ii) {
                                const Complex v = s02.get(i, ii);
                                if (v != Complex(0.0, 0.0))
                                    trip.emplace_back(k * m + i, kk * m + ii, wt * v);
                            }
                }
                for (int ii = 0; ii < m; ++ii) {
                    trip.emplace_back(k * m + m - 2, k * m + ii,
                                      Complex(bc_plus(kind, ii), 0.0));
                    trip.emplace_back(k * m + m - 1, k * m + ii,
                                      Complex(bc_minus(kind, ii), 0.0));
                }
            }

            SpMat A(rows, rows);
            A.setFromTriplets(trip.begin(), trip.end());
            A.makeCompressed();
            auto lu = std::make_unique<SpLU>();
            lu->compute(A);
            if (lu->info() != Eigen::Success)
                throw SolverError("helmholtz: singular system for azimuthal mode " +
                                  std::to_string(static_cast<int>(jm)));
            mode_lu[static_cast<std::size_t>(j)] = std::move(lu);
        }

        if (mean_on_legendre) {
            // Radial dense systems per Legendre degree l:
            //   r^2 u'' + 2 r u' - l(l+1) u = r^2 f_l.
            // The degree-l profile of a legal doubled function has radial
            // parity (-1)^l, so the system is posed on the matching
            // coefficient subset; the back-sheet boundary condition is then
            // implied and the front one suffices.  Degree 0 carries the
            // kernel of the pure Neumann problem and gets the gauge row.
            const BandedMatrix lr0 = mr2.times(d2).plus(mr.times(s1.times(d1)).scaled(2.0));
            degree_lu.reserve(static_cast<std::size_t>(p / 2) + 1);
            for (int l = 0; l <= p / 2; ++l) {
                const BandedMatrix al =
                    lr0.plus(s02.scaled(Complex(-static_cast<double>(l) * (l + 1), 0.0)));
                const int par = l % 2;
                const int q = (m - par + 1) / 2;
                DenseMat A = DenseMat::Zero(q, q);
                int row = 0;
                if (l == 0) A(row++, 0) = 1.0; // gauge: pin the leading coefficient
                for (int t = 0; t < q; ++t) A(row, t) = bc_plus(kind, par + 2 * t);
                ++row;
                for (int k = par; row < q; k += 2, ++row)
                    for (int t = 0; t < q; ++t) A(row, t) = al.get(k, par + 2 * t);
                Eigen::PartialPivLU<DenseMat> lu(A);
                degree_lu.push_back(std::move(lu));
            }
        }
    }
};

HelmholtzSolver::HelmholtzSolver(double k2, int m, int n, int p, BcKind kind)
    : impl_(std::make_unique<Impl>(k2, m, n, p, kind)) {}

HelmholtzSolver::~HelmholtzSolver() = default;
HelmholtzSolver::HelmholtzSolver(HelmholtzSolver&&) noexcept = default;
HelmholtzSolver& HelmholtzSolver::operator=(HelmholtzSolver&&) noexcept = default;

double HelmholtzSolver::k2() const { return impl_->k2; }
int HelmholtzSolver::m() const { return impl_->m; }
int HelmholtzSolver::n() const { return impl_->n; }
int HelmholtzSolver::p() const { return impl_->p; }
BcKind HelmholtzSolver::kind() const { return impl_->kind; }

BallScalar HelmholtzSolver::solve(const BallScalar& f, const BoundaryTrace& bc) const {
    const Impl& im = *impl_;
    const int m = im.m, n = im.n, p = im.p;

    if (im.mean_on_legendre) {
        const double flux = sum2_boundary(bc);
        const double volume = sum3(f);
        const double scale = std::max(std::abs(flux), std::abs(volume));
        if (scale > 1e-10 && std::abs(flux - volume) > 1e-8 * scale)
            throw SolverError("helmholtz: pure Neumann data is incompatible (boundary "
                              "flux " +
                              std::to_string(flux) + " != volume source " +
                              std::to_string(volume) + ")");
    }

    // T x Fourier coefficients of r^2 f, then of r^2 sin^2(theta) f
    // converted radially to C^(2).
    CffTensor fr2 = f.coeffs().resized(m, n, p);
    apply_along(fr2, im.mult_r, 0);
    apply_along(fr2, im.mult_r, 0);
    CffTensor rhs = fr2;
    apply_along(rhs, fourier_mult_sin2(p), 2);
    apply_along(rhs, im.s02, 0);

    const CffTensor g = bc.g.resized(1, n, p);
    const double sigma = im.kind == BcKind::dirichlet ? 1.0 : -1.0;

    CffTensor U(m, n, p);
    DenseVec b(m * p), u(m * p);
    for (int j = 0; j < n; ++j) {
        const int jm = j - n / 2;
        if (im.mean_on_legendre && jm == 0) continue;

        for (int k = 0; k < p; ++k) {
            for (int i = 0; i + 2 < m; ++i) b[k * m + i] = rhs(i, j, k);
            const int km = k - p / 2;
            const int neg = k == 0 ? 0 : p - k; // slot of mode -km
            const double refl = (jm + km) % 2 == 0 ? 1.0 : -1.0;
            b[k * m + m - 2] = g(0, j, k);
            b[k * m + m - 1] = sigma * refl * g(0, j, neg);
        }
        u = im.mode_lu[static_cast<std::size_t>(j)]->solve(b);
        for (int k = 0; k < p; ++k)
            for (int i = 0; i < m; ++i) U(i, j, k) = u[k * m + i];
    }

    if (im.mean_on_legendre) {
        // Fold the azimuthal mean's polar modes onto cos(k theta) =
        // T_k(cos theta), convert to Legendre, solve per degree, unfold.
        const int half = p / 2;
        std::vector<std::vector<Complex>> fleg(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            std::vector<Complex> fold(static_cast<std::size_t>(half) + 1);
            fold[0] = fr2(i, n / 2, half);
            for (int kk = 1; kk < half; ++kk)
                fold[static_cast<std::size_t>(kk)] =
                    fr2(i, n / 2, half + kk) + fr2(i, n / 2, half - kk);
            fold[static_cast<std::size_t>(half)] = fr2(i, n / 2, 0);
            fleg[static_cast<std::size_t>(i)] = cheb2leg(fold);
        }
        std::vector<Complex> gfold(static_cast<std::size_t>(half) + 1);
        gfold[0] = g(0, n / 2, half);
        for (int kk = 1; kk < half; ++kk)
            gfold[static_cast<std::size_t>(kk)] =
                g(0, n / 2, half + kk) + g(0, n / 2, half - kk);
        gfold[static_cast<std::size_t>(half)] = g(0, n / 2, 0);
        const std::vector<Complex> gleg = cheb2leg(gfold);

        std::vector<std::vector<Complex>> uleg(
            static_cast<std::size_t>(half) + 1,
            std::vector<Complex>(static_cast<std::size_t>(m), Complex(0.0, 0.0)));
        for (int l = 0; l <= half; ++l) {
            // Radial T coefficients of r^2 f_l, converted to C^(2) rows.
            std::vector<Complex> rf(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) rf[static_cast<std::size_t>(i)] =
                fleg[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
            const std::vector<Complex> rc2 = im.s02.apply(rf);

            const int par = l % 2;
            const int q = (m - par + 1) / 2;
            DenseVec bl(q);
            int row = 0;
            if (l == 0) bl[row++] = Complex(0.0, 0.0);
            bl[row++] = gleg[static_cast<std::size_t>(l)];
            for (int k = par; row < q; k += 2, ++row) bl[row] = rc2[static_cast<std::size_t>(k)];
            const DenseVec ul = im.degree_lu[static_cast<std::size_t>(l)].solve(bl);
            for (int t = 0; t < q; ++t)
                uleg[static_cast<std::size_t>(l)][static_cast<std::size_t>(par + 2 * t)] =
                    ul[t];
        }

        for (int i = 0; i < m; ++i) {
            std::vector<Complex> lcoef(static_cast<std::size_t>(half) + 1);
            for (int l = 0; l <= half; ++l)
                lcoef[static_cast<std::size_t>(l)] =
                    uleg[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)];
            const std::vector<Complex> cosk = leg2cheb(lcoef);
            U(i, n / 2, half) = cosk[0];
            for (int kk = 1; kk < half; ++kk) {
                U(i, n / 2, half + kk) = 0.5 * cosk[static_cast<std::size_t>(kk)];
                U(i, n / 2, half - kk) = 0.5 * cosk[static_cast<std::size_t>(kk)];
            }
            U(i, n / 2, 0) = cosk[static_cast<std::size_t>(half)];
        }
    }

    return simplify(U, false);
}

BallScalar helmholtz_solve(const BallScalar& f, double k2, const BoundaryTrace& bc,
                           int m, int n, int p, BcKind kind) {
    return HelmholtzSolver(k2, m, n, p, kind).solve(f, bc);
}

} // namespace ballkit
