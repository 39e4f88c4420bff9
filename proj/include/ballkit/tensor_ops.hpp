#pragma once

#include <functional>

#include "ballkit/banded.hpp"
#include "ballkit/cff_tensor.hpp"

namespace ballkit {

// Line-wise application of coefficient-space operators along one dimension
// of a tensor.  Dim 0 = radial (Chebyshev), 1 = azimuthal, 2 = polar.

void apply_along(CffTensor& A, const BandedMatrix& M, int dim);
void solve_along(CffTensor& A, const BandedLU& lu, int dim);

// In-place Chebyshev differentiation of every radial line.
void cheb_diff_radial(CffTensor& A);

// Scale every (i, j, k) entry by s(mode) of the chosen angular dimension
// (1 = azimuthal mode j, 2 = polar mode k).
void scale_by_mode(CffTensor& A, int dim, const std::function<Complex(int)>& s);

} // namespace ballkit
