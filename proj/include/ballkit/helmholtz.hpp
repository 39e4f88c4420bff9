#pragma once

#include <memory>

#include "ballkit/calculus.hpp"

namespace ballkit {

enum class BcKind { dirichlet, neumann };

// Spectral solver for  lap(u) + k2 * u = f  on the unit ball with either
// u = g (dirichlet) or du/dr = g (neumann) on the boundary, discretized at
// fixed doubled sizes (m, n, p).
//
// The equation is multiplied by r^2 sin^2(theta), which keeps every
// operator polynomial: each azimuthal mode decouples into a radial x polar
// problem whose radial part is an almost-banded ultraspherical system and
// whose polar part couples neighbouring Fourier modes.  Each mode's system
// is factored once at construction, so repeated solves against new data
// (e.g. inside a time stepper) reuse the factorizations.
//
// The pure Neumann Laplace problem (k2 == 0) is only determined up to a
// constant and requires the boundary flux to match the volume integral of
// the source; solve() enforces the compatibility within a relative 1e-8
// and gauges the result by zeroing the leading coefficient.  Its azimuthal
// mean is handled on a Legendre ladder where the polar operator
// diagonalizes and the kernel can be pinned per degree.
class HelmholtzSolver {
public:
    HelmholtzSolver(double k2, int m, int n, int p, BcKind kind);
    ~HelmholtzSolver();
    HelmholtzSolver(HelmholtzSolver&&) noexcept;
    HelmholtzSolver& operator=(HelmholtzSolver&&) noexcept;

    BallScalar solve(const BallScalar& f, const BoundaryTrace& bc) const;

    double k2() const;
    int m() const;
    int n() const;
    int p() const;
    BcKind kind() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// One-shot convenience wrapper.
BallScalar helmholtz_solve(const BallScalar& f, double k2, const BoundaryTrace& bc,
                           int m, int n, int p, BcKind kind = BcKind::dirichlet);

} // namespace ballkit
