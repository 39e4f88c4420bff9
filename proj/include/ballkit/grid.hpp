#pragma once

#include <vector>

#include "ballkit/cff_tensor.hpp"

namespace ballkit {

// Sampling grid for the doubled representation of a function on the ball.
//
// The doubled tensor grid of size m x n x p is
//   r_a      = cos(a*pi/(m-1)),          a = 0..m-1   (descending, r_0 = 1)
//   lambda_b = 2*pi*(b - n/2)/n,         b = 0..n-1   (from -pi)
//   theta_c  = 2*pi*(c - p/2)/p,         c = 0..p-1   (from -pi)
// but a function on the ball only ever needs samples on the classical
// octant r >= 0, theta in [0, pi]; the rest of the doubled grid is filled
// by symmetry (see double_samples).  This struct stores just that half:
//   radii   : the distinct nonnegative abscissae, ascending
//   lambdas : all n azimuthal nodes
//   thetas  : the p/2 + 1 polar nodes 2*pi*k/p, k = 0..p/2 (0 .. pi)
struct SampleGrid {
    int m = 0, n = 0, p = 0;
    std::vector<double> radii;
    std::vector<double> lambdas;
    std::vector<double> thetas;
};

// Build the grid for doubled sizes (m, n, p).  n and p must be even and
// >= 2; m >= 1.  For even m the half radii exclude 0; for odd m they
// include it.
SampleGrid make_grid(int m, int n, int p);

// Fill the full doubled tensor from samples taken on the half grid.
// `half` must be shaped (radii.size() x n x thetas.size()) with layout
// half(i, b, k) = f(radii[i], lambdas[b], thetas[k]).  Every entry of the
// result is a plain copy of one input sample; no arithmetic is performed.
CffTensor double_samples(const SampleGrid& g, const CffTensor& half);

} // namespace ballkit
