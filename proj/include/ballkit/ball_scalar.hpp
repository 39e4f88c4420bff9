#pragma once

#include <functional>
#include <utility>

#include "ballkit/cff_tensor.hpp"
#include "ballkit/resolution.hpp"

namespace ballkit {

enum class Coords { cartesian, spherical };

// Pointwise evaluator used by the adaptive constructor.  For
// Coords::cartesian the arguments are (x, y, z); for Coords::spherical
// they are (r, lambda, theta) with r in [0,1], lambda in [-pi,pi),
// theta in [0,pi].
using PointFn = std::function<double(double, double, double)>;

// A scalar function on the closed unit ball, stored as the coefficient
// tensor of its doubled (sphere-periodic, radius-reflected) extension.
class BallScalar {
public:
    BallScalar(); // the zero function, 1 x 2 x 2

    BallScalar(CffTensor coeffs, bool resolved, double vscale)
        : coeffs_(std::move(coeffs)), resolved_(resolved), vscale_(vscale) {
        coeffs_.require_even_angular();
    }

    const CffTensor& coeffs() const { return coeffs_; }
    int m() const { return coeffs_.m(); }
    int n() const { return coeffs_.n(); }
    int p() const { return coeffs_.p(); }
    bool resolved() const { return resolved_; }
    double vscale() const { return vscale_; }

private:
    CffTensor coeffs_;
    bool resolved_ = true;
    double vscale_ = 0.0;
};

struct ConstructOptions {
    double tol = default_tol();
    // Refinement level L samples 2^(4+L)+1 radial and polar half-grid
    // points and 2^(4+L) azimuthal points; the caps below correspond to
    // 2^13+1 radial samples and tensor angular sizes of 2^13.
    int max_level_radial = 9;
    int max_level_lambda = 9;
    int max_level_theta = 8;
};

// Adaptive construction: sample on successively finer doubled grids,
// transform, and stop once the coefficient envelope of every dimension
// decays below tol * vscale; the result is trimmed to the chop points.
// Throws UnresolvedError (carrying the last report) if any dimension is
// still unresolved at its size cap.
BallScalar construct(const PointFn& f, Coords coords = Coords::cartesian,
                     const ConstructOptions& opts = {});

// Fixed-size construction at doubled sizes (m, n, p): one sampling pass,
// no refinement; the result keeps the requested sizes untrimmed and is
// flagged resolved only if the report converged.
BallScalar construct_fixed(const PointFn& f, Coords coords, int m, int n, int p,
                           double tol = default_tol());

// Wrap a raw coefficient tensor produced by some operation: measure its
// value scale on the grid, re-run the chop, trim, and flag resolution.
// With `must_resolve`, an unconverged report throws UnresolvedError.
//
// `resolve_floor` separates precision from smoothness judgement: trimming
// always uses the measured output scale, but the convergence verdict uses
// tol * max(vscale, resolve_floor).  Operations pass the scale their
// inherited noise lives at (e.g. the input's undecayed coefficient level
// times a derivative amplification factor) so that legitimate spectral
// noise is not mistaken for non-smoothness.
//
// `zero_floor` bounds the rounding noise alone: an output entirely below
// tol * zero_floor collapses to the zero function.  It defaults to
// resolve_floor, but operations on data with an elevated noise plateau
// must pass the rounding-level floor here, or values smaller than the
// worst-case inherited-noise bound would be wiped out.
BallScalar simplify(const CffTensor& coeffs, bool must_resolve, double tol = default_tol(),
                    double resolve_floor = 0.0, double zero_floor = -1.0);

// Check whether the tensor represents a legal doubled function: the grid
// values must satisfy the block reflection relations, and the function
// must be single-valued (constant) at r = 0 and along theta = 0 and
// theta = pi, all within tol * vscale.
bool is_bmc(const CffTensor& A, double tol);

} // namespace ballkit
