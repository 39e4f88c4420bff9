#pragma once

#include <array>

#include "ballkit/calculus.hpp"

namespace ballkit {

// A Cartesian vector field on the unit ball: three independent scalar
// components.  Storing Cartesian (rather than spherical) components keeps
// every component an ordinary smooth scalar; spherical components exist
// only as intermediate coefficient tensors inside the decompositions.
class BallVector {
public:
    BallVector() = default; // zero field
    BallVector(BallScalar x, BallScalar y, BallScalar z);

    const BallScalar& x() const { return c_[0]; }
    const BallScalar& y() const { return c_[1]; }
    const BallScalar& z() const { return c_[2]; }
    const BallScalar& comp(int axis) const;

    double vscale() const; // max over components

private:
    std::array<BallScalar, 3> c_;
};

BallVector construct_vector(const PointFn& fx, const PointFn& fy, const PointFn& fz,
                            Coords coords = Coords::cartesian,
                            const ConstructOptions& opts = {});

std::array<Complex, 3> eval_vector(const BallVector& v, double x, double y, double z);

BallVector add(const BallVector& a, const BallVector& b);
BallVector sub(const BallVector& a, const BallVector& b);
BallVector scale(const BallVector& a, double s);
inline BallVector operator+(const BallVector& a, const BallVector& b) { return add(a, b); }
inline BallVector operator-(const BallVector& a, const BallVector& b) { return sub(a, b); }
inline BallVector operator*(double s, const BallVector& a) { return scale(a, s); }

// ---- Vector calculus --------------------------------------------------------

BallVector grad(const BallScalar& f);
BallScalar div(const BallVector& v);
BallVector curl(const BallVector& v);
BallScalar dot(const BallVector& a, const BallVector& b);
BallVector cross(const BallVector& a, const BallVector& b);

// Fourier x Fourier coefficients of the radial component restricted to the
// unit sphere.
BoundaryTrace radial_trace(const BallVector& v);

// ---- Poloidal / toroidal decomposition --------------------------------------

// Potentials of a divergence-free field:
//   v = curl(curl(poloidal * (x,y,z))) + curl(toroidal * (x,y,z)).
// Both potentials are gauged so their azimuthal-and-polar mean vanishes on
// every shell (adding any radial function to either potential produces the
// same field).
struct PtPotentials {
    BallScalar poloidal;
    BallScalar toroidal;
};

// Requires div v = 0 within a relative 1e-8; throws SolverError otherwise.
PtPotentials pt_decompose(const BallVector& v);

BallVector pt_to_vector(const PtPotentials& parts);

// ---- Helmholtz-Hodge decomposition ------------------------------------------

// v = grad(potential) + solenoidal with div(solenoidal) = 0 and vanishing
// radial component of `solenoidal` on the boundary; obtained from a pure
// Neumann Poisson solve for the potential.
struct HodgeDecomposition {
    BallScalar potential;
    BallVector solenoidal;
};

HodgeDecomposition helmholtz_hodge(const BallVector& v);

} // namespace ballkit
