#pragma once

#include "ballkit/ball_scalar.hpp"

namespace ballkit {

// ---- Point evaluation -------------------------------------------------------

// Evaluate the coefficient tensor at a point of the doubled domain
// (r in [-1,1], angles unrestricted).  No domain checks; Clenshaw in the
// radial direction, Horner in both angles.
Complex eval_sph_unchecked(const CffTensor& A, double r, double lam, double th);

// Evaluate at a spherical point of the closed unit ball; r may exceed 1 by
// at most 1e-12 (clamped), otherwise DomainError.
Complex eval_point_sph(const BallScalar& f, double r, double lam, double th);

// Evaluate at a Cartesian point of the closed unit ball.
Complex eval_point(const BallScalar& f, double x, double y, double z);

// ---- Arithmetic -------------------------------------------------------------

BallScalar add(const BallScalar& a, const BallScalar& b);
BallScalar sub(const BallScalar& a, const BallScalar& b);
BallScalar mul(const BallScalar& a, const BallScalar& b);
BallScalar scale(const BallScalar& a, double s);

inline BallScalar operator+(const BallScalar& a, const BallScalar& b) { return add(a, b); }
inline BallScalar operator-(const BallScalar& a, const BallScalar& b) { return sub(a, b); }
inline BallScalar operator*(const BallScalar& a, const BallScalar& b) { return mul(a, b); }
inline BallScalar operator*(double s, const BallScalar& a) { return scale(a, s); }

// ---- Integration ------------------------------------------------------------

// Integral over the unit ball (volume element r^2 sin(theta)).  Exact in
// the coefficients: nonzero contributions come from the azimuthal mean
// (j = 0), even radial degrees, and the polar modes with nonvanishing
// integral against sin(theta).
double sum3(const BallScalar& f);

// ---- Differentiation --------------------------------------------------------

// Cartesian partial derivative, axis 0 = x, 1 = y, 2 = z.  Works entirely
// in coefficient space; divisions by r and sin(theta) are banded solves on
// padded (even-sized) tensors.  Throws UnresolvedError when the result
// does not decay (the input was not smooth enough).
BallScalar diff_cart(const BallScalar& f, int axis);

BallScalar laplacian(const BallScalar& f);

// ---- Boundary restriction ---------------------------------------------------

// Fourier x Fourier coefficients of the restriction to the unit sphere,
// stored as a 1 x n x p tensor (the doubled sphere function).
struct BoundaryTrace {
    CffTensor g; // 1 x n x p

    int n() const { return g.n(); }
    int p() const { return g.p(); }
    Complex eval(double lam, double th) const;
};

BoundaryTrace boundary_trace(const BallScalar& f);

// Build a trace by sampling a Cartesian function on the unit sphere at the
// (n, p)-point doubled grid.
BoundaryTrace trace_from_function(const PointFn& fn, Coords coords, int n, int p);

// Integral over the unit sphere (area element sin(theta)).
double sum2_boundary(const BoundaryTrace& g);

} // namespace ballkit
