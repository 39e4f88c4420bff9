#include "ballkit/grid.hpp"

#include <cmath>

namespace ballkit {

SampleGrid make_grid(int m, int n, int p) {
    if (m < 1)
        throw InvalidSizeError("make_grid: need m >= 1");
    if (n < 2 || p < 2 || (n & 1) || (p & 1))
        throw InvalidSizeError("make_grid: angular sizes must be even and >= 2");

    SampleGrid g;
    g.m = m;
    g.n = n;
    g.p = p;

    const double pi = std::acos(-1.0);

    if (m == 1) {
        g.radii = {1.0};
    } else if (m % 2 == 0) {
        // Positive half of the Chebyshev grid cos(a*pi/(m-1)); ascending.
        g.radii.resize(m / 2);
        for (int i = 0; i < m / 2; ++i)
            g.radii[i] = std::cos((m / 2 - 1 - i) * pi / (m - 1));
    } else {
        // Odd m: the grid contains r = 0.
        const int h = (m + 1) / 2;
        g.radii.resize(h);
        for (int i = 0; i < h; ++i)
            g.radii[i] = std::cos(((m - 1) / 2 - i) * pi / (m - 1));
    }

    g.lambdas.resize(n);
    for (int b = 0; b < n; ++b)
        g.lambdas[b] = 2.0 * pi * (b - n / 2) / n;

    g.thetas.resize(p / 2 + 1);
    for (int k = 0; k <= p / 2; ++k)
        g.thetas[k] = 2.0 * pi * k / p;

    return g;
}

CffTensor double_samples(const SampleGrid& g, const CffTensor& half) {
    const int m = g.m, n = g.n, p = g.p;
    const int hr = static_cast<int>(g.radii.size());
    const int ht = static_cast<int>(g.thetas.size());
    if (half.m() != hr || half.n() != n || half.p() != ht)
        throw InvalidSizeError("double_samples: half tensor shape does not match grid");

    CffTensor full(m, n, p);
    // Half radial index of |r_a|, or -1 past the positive range.
    auto rad_index = [&](int a) {
        if (m == 1) return 0;
        if (m % 2 == 0)
            return a < m / 2 ? m / 2 - 1 - a : a - m / 2;
        return a <= (m - 1) / 2 ? (m - 1) / 2 - a : a - (m + 1) / 2 + 1;
    };
    const int pos_limit = (m == 1) ? 1 : (m % 2 == 0 ? m / 2 : (m + 1) / 2);

    for (int c = 0; c < p; ++c) {
        const bool north = c >= p / 2; // theta_c >= 0
        for (int b = 0; b < n; ++b) {
            const int b_shift = (b + n / 2) % n; // lambda + pi
            for (int a = 0; a < m; ++a) {
                const int i = rad_index(a);
                Complex v;
                if (a < pos_limit) {
                    v = north ? half(i, b, c - p / 2)          // f(r, lam, th)
                              : half(i, b_shift, p / 2 - c);   // f(r, lam+pi, -th)
                } else {
                    v = north ? half(i, b_shift, p - c)        // f(|r|, lam+pi, pi-th)
                              : half(i, b, c);                 // f(|r|, lam, pi+th)
                }
                full(a, b, c) = v;
            }
        }
    }
    return full;
}

} // namespace ballkit
