#pragma once

#include "ballkit/cff_tensor.hpp"

namespace ballkit {

// Chebyshev--Fourier--Fourier analysis of values on the doubled tensor grid
// (see grid.hpp for the node layout).  The result is the coefficient tensor
// alpha with
//   f(r_a, lambda_b, theta_c) = sum_{i,j,k} alpha(i, j+n/2, k+p/2)
//                               * T_i(r_a) * e^{i j lambda_b} * e^{i k theta_c},
// j = -n/2..n/2-1, k = -p/2..p/2-1.  Cost O(m n p log(m n p)).
CffTensor vals2coeffs(const CffTensor& vals);

// Inverse of vals2coeffs: synthesize grid values from coefficients.
CffTensor coeffs2vals(const CffTensor& coeffs);

} // namespace ballkit
