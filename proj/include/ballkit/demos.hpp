#pragma once

#include <vector>

#include "ballkit/helmholtz.hpp"
#include "ballkit/vector_field.hpp"

namespace ballkit {

// One semi-implicit Euler step of  dc/dt + v . grad(c) = nu * lap(c)  with a
// no-flux boundary.  Advection is evaluated at the current state and the
// diffusion absorbed into a Helmholtz solve, so the time step is encoded in
// the solver: k2 = -1 / (nu * dt).  The solver must use neumann data.
BallScalar advdiff_step(const BallScalar& c, const BallVector& v, double nu,
                        const HelmholtzSolver& solver);

// Passive scalar stirred by the swirl v = exp(-5 r^2) * (-y, x, 0):
// c0 = -x * exp(-5 r^2), nu = 1/5000, dt = 1/20, solved at sizes n^3.
// Returns the steps + 1 states starting with c0.  No-flux walls keep the
// total of each state equal to the total of c0.
std::vector<BallScalar> demo_advdiff(int steps, int n);

// One step of the induction equation  dB/dt = curl(u x B) + nu * lap(B)
// for a divergence-free B held as its poloidal / toroidal pair.  The vector
// Laplacian of curl(Phi * rvec) is curl(lap(Phi) * rvec), so each potential
// diffuses independently and both advance through the same solve
// (k2 = -1 / (nu * dt), homogeneous dirichlet data); the curl(u x B) term
// is reconstructed, crossed, and re-decomposed every step.
PtPotentials induction_step(const PtPotentials& b, const BallVector& u, double nu,
                            const HelmholtzSolver& solver);

// Kinematic dynamo snapshot: a fixed solenoidal flow u = curl(W) of
// W = exp(-5 r^2) * (x^2, y^2, x z) advects a seed field with toroidal
// potential z * exp(-5 r^2), nu = 1/3000, dt = 1/20, sizes n^3.  Returns
// the steps + 1 potential pairs starting with the seed.
std::vector<PtPotentials> demo_induction(int steps, int n);

} // namespace ballkit
