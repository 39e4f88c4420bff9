#pragma once

#include <vector>

#include "ballkit/cff_tensor.hpp"

namespace ballkit {

// Coefficient-decay diagnostics for one tensor.  Profiles are maxima of
// |alpha| over the other two dimensions; the angular ones are slot-indexed
// (mode = slot - size/2).
struct ResolutionReport {
    std::vector<double> cols;  // radial profile, length m
    std::vector<double> rows;  // azimuthal profile, length n
    std::vector<double> tubes; // polar profile, length p

    // Last index (radial) / largest |mode| (angular) whose decreasing
    // envelope exceeds the threshold; -1 when everything is below it.
    int chop_radial = -1;
    int chop_lambda = -1;
    int chop_theta = -1;

    bool radial_ok = false;
    bool lambda_ok = false;
    bool theta_ok = false;
    bool converged = false;

    double vscale = 0.0;
    double threshold = 0.0;

    // Tensor sizes that keep every index up to the chop point (angular
    // sizes stay even and >= 2).
    int trim_m() const { return chop_radial < 0 ? 1 : chop_radial + 1; }
    int trim_n() const { return chop_lambda < 0 ? 2 : 2 * (chop_lambda + 1); }
    int trim_p() const { return chop_theta < 0 ? 2 : 2 * (chop_theta + 1); }
};

// Plateau threshold: coefficients at or below tol * vscale are noise.
// tol defaults to 1e-15 and can be overridden with the BALLKIT_TOL
// environment variable (read once per process).
double default_tol();

// Analyze decay of A against tol * vscale (absolute tol when vscale == 0).
// A dimension is converged when its envelope drops below the threshold
// before the last two entries (for the angular dimensions, entries of the
// |mode|-folded envelope).
ResolutionReport resolution_report(const CffTensor& A, double vscale, double tol);

// Thrown when adaptive refinement hits the size cap, or when an operation's
// output fails to decay at its working size.
struct UnresolvedError : Error {
    UnresolvedError(const std::string& what, ResolutionReport rep)
        : Error(what), report(std::move(rep)) {}
    ResolutionReport report;
};

} // namespace ballkit
