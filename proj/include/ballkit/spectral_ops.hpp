#pragma once

#include <vector>

#include "ballkit/banded.hpp"

namespace ballkit {

// ---- Fourier multiplication / differentiation operators -------------------
// All act on slot-indexed coefficient vectors of even length n (mode =
// slot - n/2).  Multiplying by a trig factor shifts modes, so callers pad
// before applying if the top modes matter.

BandedMatrix fourier_deriv(int n);          // d/dtheta: diag(i * mode)
BandedMatrix fourier_mult_cos(int n);       // cos(theta) *
BandedMatrix fourier_mult_sin(int n);       // sin(theta) *
BandedMatrix fourier_mult_sin2(int n);      // sin^2(theta) *
BandedMatrix fourier_mult_sincos(int n);    // sin(theta)cos(theta) *

// ---- Chebyshev operators ---------------------------------------------------

// Multiplication by r in the Chebyshev basis; nonsingular only for even m.
BandedMatrix cheb_mult_r(int m);

// Derivative of a Chebyshev series; output degree stays < m (top entry 0).
std::vector<Complex> cheb_diff(const std::vector<Complex>& c);

// ---- Ultraspherical ladder -------------------------------------------------
// Degree-m operators for the C^(1)/C^(2) bases used by the radial solver.

BandedMatrix ultra_D1(int m);   // T -> C^(1): d/dr
BandedMatrix ultra_D2(int m);   // T -> C^(2): d^2/dr^2
BandedMatrix ultra_S0(int m);   // T -> C^(1) conversion
BandedMatrix ultra_S1(int m);   // C^(1) -> C^(2) conversion
BandedMatrix ultra_mult_r_c2(int m);   // r * in C^(2)
BandedMatrix ultra_mult_r2_c2(int m);  // r^2 * in C^(2)

// ---- Chebyshev <-> Legendre ------------------------------------------------
// Dense O(p^2) basis conversions via the three-term recurrences; used by
// the zero-wavenumber polar path where the solve sizes are small.

std::vector<Complex> cheb2leg(const std::vector<Complex>& c);
std::vector<Complex> leg2cheb(const std::vector<Complex>& l);

} // namespace ballkit
