#pragma once

#include <iosfwd>
#include <string>

#include "ballkit/ball_scalar.hpp"

namespace ballkit {

// Binary container for a coefficient tensor (.bfn):
//   bytes 0..3   magic "BFN1"
//   bytes 4..15  m, n, p as unsigned 32-bit little-endian
//   byte  16     coordinate-convention tag (always 1: Chebyshev degree in r,
//                Fourier modes in lambda and theta, slot j holds mode j-n/2)
//   then m*n*p (real, imag) IEEE-754 double little-endian pairs, entry
//   (i,j,k) at linear index i + m*(j + n*k).
// Total length is 17 + 16*m*n*p bytes.  The round trip is bit-exact.  A
// file carries no resolution metadata: loading takes the coefficients at
// face value (resolved, with vscale re-measured on the synthesis grid), so
// a loaded vscale can differ slightly from the finer-grid value measured
// by the adaptive constructor.
void save(const BallScalar& f, const std::string& path);
BallScalar load(const std::string& path);

// Sample f on a plane and write CSV rows "coord1,coord2,value".  Plane
// specs: "x=c", "y=c", "z=c" with |c| <= 1 (grid over the other two
// coordinates, rows outside the ball skipped), or "r=1" (the boundary
// sphere, columns lambda,theta).  res points per direction, endpoints
// included, first column varying slowest.  Throws DomainError for a
// malformed spec, a plane missing the ball, or res < 2.
void emit_slice(const BallScalar& f, const std::string& plane, int res, std::ostream& out);

} // namespace ballkit
