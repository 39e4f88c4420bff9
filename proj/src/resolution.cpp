#include "ballkit/resolution.hpp"

#include <algorithm>
#include <cstdlib>

namespace ballkit {

double default_tol() {
    static const double tol = [] {
        if (const char* s = std::getenv("BALLKIT_TOL")) {
            char* end = nullptr;
            double v = std::strtod(s, &end);
            if (end != s && v > 0.0 && v < 1.0) return v;
        }
        return 1e-15;
    }();
    return tol;
}

namespace {

// Last index whose tail maximum exceeds thresh; -1 if none does.
int chop_index(const std::vector<double>& profile, double thresh) {
    double tail = 0.0;
    int chop = -1;
    for (int i = static_cast<int>(profile.size()) - 1; i >= 0; --i) {
        tail = std::max(tail, profile[i]);
        if (tail > thresh) {
            chop = i;
            break;
        }
    }
    return chop;
}

// Fold a slot-indexed Fourier profile onto |mode| magnitudes 0..size/2.
std::vector<double> fold_modes(const std::vector<double>& slots) {
    const int n = static_cast<int>(slots.size());
    std::vector<double> fold(static_cast<std::size_t>(n / 2) + 1, 0.0);
    for (int t = 0; t < n; ++t) {
        const int q = std::abs(t - n / 2);
        fold[q] = std::max(fold[q], slots[t]);
    }
    return fold;
}

} // namespace

ResolutionReport resolution_report(const CffTensor& A, double vscale, double tol) {
    A.require_even_angular();
    const int m = A.m(), n = A.n(), p = A.p();

    ResolutionReport rep;
    rep.vscale = vscale;
    rep.threshold = vscale > 0.0 ? tol * vscale : tol;
    rep.cols.assign(static_cast<std::size_t>(m), 0.0);
    rep.rows.assign(static_cast<std::size_t>(n), 0.0);
    rep.tubes.assign(static_cast<std::size_t>(p), 0.0);

    for (int k = 0; k < p; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i) {
                const double a = std::abs(A(i, j, k));
                rep.cols[i] = std::max(rep.cols[i], a);
                rep.rows[j] = std::max(rep.rows[j], a);
                rep.tubes[k] = std::max(rep.tubes[k], a);
            }

    rep.chop_radial = chop_index(rep.cols, rep.threshold);
    const std::vector<double> lfold = fold_modes(rep.rows);
    const std::vector<double> tfold = fold_modes(rep.tubes);
    rep.chop_lambda = chop_index(lfold, rep.threshold);
    rep.chop_theta = chop_index(tfold, rep.threshold);

    rep.radial_ok = rep.chop_radial < m - 2;
    rep.lambda_ok = rep.chop_lambda < static_cast<int>(lfold.size()) - 2;
    rep.theta_ok = rep.chop_theta < static_cast<int>(tfold.size()) - 2;
    rep.converged = rep.radial_ok && rep.lambda_ok && rep.theta_ok;
    return rep;
}

} // namespace ballkit
