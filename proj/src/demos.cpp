#include "ballkit/demos.hpp"

#include <cmath>

#include "ballkit/errors.hpp"

namespace ballkit {

namespace {

constexpr double kDt = 5e-2;

double gauss5(double x, double y, double z) {
    return std::exp(-5.0 * (x * x + y * y + z * z));
}

BoundaryTrace zero_trace(const HelmholtzSolver& solver) {
    return BoundaryTrace{CffTensor(1, solver.n(), solver.p())};
}

// The implicit solve carries boundary layers of width 1/sqrt(|k2|).  The
// radial grid must resolve them, or the returned potentials stop decaying
// and structure built on top of them (e.g. the divergence of the rebuilt
// field) leaks at the layer's truncation level.  Chebyshev coefficients of
// exp(-sqrt(|k2|)(1-r)) reach machine precision near
// m = sqrt(2 log(1/eps) sqrt(|k2|)).
int layer_resolving_radial(double k2, int n) {
    const double kappa = std::sqrt(std::abs(k2));
    const int m = static_cast<int>(std::ceil(std::sqrt(2.0 * std::log(1e15) * kappa)));
    return std::max(n, m);
}

} // namespace

BallScalar advdiff_step(const BallScalar& c, const BallVector& v, double nu,
                        const HelmholtzSolver& solver) {
    if (!(nu > 0.0)) throw DomainError("advdiff_step: diffusivity must be positive");
    BallScalar rhs = add(scale(c, solver.k2()), scale(dot(v, grad(c)), 1.0 / nu));
    return solver.solve(rhs, zero_trace(solver));
}

std::vector<BallScalar> demo_advdiff(int steps, int n) {
    if (steps < 0) throw DomainError("demo_advdiff: steps must be >= 0");
    const double nu = 1.0 / 5000.0;
    const double k2 = -1.0 / (nu * kDt);

    PtPotentials swirl;
    swirl.toroidal = construct([](double x, double y, double z) { return z * gauss5(x, y, z); });
    BallVector v = pt_to_vector(swirl);

    BallScalar c = construct([](double x, double y, double z) { return -x * gauss5(x, y, z); });

    std::vector<BallScalar> states;
    states.reserve(static_cast<std::size_t>(steps) + 1);
    states.push_back(c);
    if (steps > 0) {
        HelmholtzSolver solver(k2, layer_resolving_radial(k2, n), n, n, BcKind::neumann);
        for (int s = 0; s < steps; ++s) {
            c = advdiff_step(c, v, nu, solver);
            states.push_back(c);
        }
    }
    return states;
}

PtPotentials induction_step(const PtPotentials& b, const BallVector& u, double nu,
                            const HelmholtzSolver& solver) {
    if (!(nu > 0.0)) throw DomainError("induction_step: diffusivity must be positive");
    BallVector field = pt_to_vector(b);
    PtPotentials stretch = pt_decompose(curl(cross(u, field)));

    PtPotentials next;
    BallScalar rhs_pol = add(scale(b.poloidal, solver.k2()), scale(stretch.poloidal, -1.0 / nu));
    BallScalar rhs_tor = add(scale(b.toroidal, solver.k2()), scale(stretch.toroidal, -1.0 / nu));
    next.poloidal = solver.solve(rhs_pol, zero_trace(solver));
    next.toroidal = solver.solve(rhs_tor, zero_trace(solver));
    return next;
}

std::vector<PtPotentials> demo_induction(int steps, int n) {
    if (steps < 0) throw DomainError("demo_induction: steps must be >= 0");
    const double nu = 1.0 / 3000.0;
    const double k2 = -1.0 / (nu * kDt);

    BallVector stream = construct_vector(
        [](double x, double y, double z) { return x * x * gauss5(x, y, z); },
        [](double x, double y, double z) { return y * y * gauss5(x, y, z); },
        [](double x, double y, double z) { return x * z * gauss5(x, y, z); });
    BallVector u = curl(stream);

    PtPotentials b;
    b.toroidal = construct([](double x, double y, double z) { return z * gauss5(x, y, z); });

    std::vector<PtPotentials> states;
    states.reserve(static_cast<std::size_t>(steps) + 1);
    states.push_back(b);
    if (steps > 0) {
        HelmholtzSolver solver(k2, layer_resolving_radial(k2, n), n, n, BcKind::dirichlet);
        for (int s = 0; s < steps; ++s) {
            b = induction_step(b, u, nu, solver);
            states.push_back(b);
        }
    }
    return states;
}

} // namespace ballkit
