#pragma once

#include <array>

#include "ballkit/ball_scalar.hpp"

namespace ballkit {

using Mat3 = std::array<std::array<double, 3>, 3>;

// Proper rotation built from extrinsic axis turns applied z, then x,
// then z: the returned matrix is Rz(alpha) * Rx(beta) * Rz(gamma).
Mat3 rotation_matrix(double alpha, double beta, double gamma);

// Actively rotated copy g with g(q) = f(R^{-1} q) for
// R = rotation_matrix(alpha, beta, gamma).  The result is re-adapted:
// sampling starts at the sizes of f and refines until the rotated
// function's coefficients decay.  Rotating by (-gamma, -beta, -alpha)
// undoes the motion.
BallScalar rotate(const BallScalar& f, double alpha, double beta, double gamma,
                  const ConstructOptions& opts = {});

} // namespace ballkit
