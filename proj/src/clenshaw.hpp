#pragma once

#include <cmath>
#include <complex>

#include "ballkit/cff_tensor.hpp"

namespace ballkit {
namespace detail {

inline Complex cheb_clenshaw(const Complex* a, int m, int stride, double x) {
    Complex b1(0.0, 0.0), b2(0.0, 0.0);
    for (int k = m - 1; k >= 1; --k) {
        const Complex b = a[static_cast<std::size_t>(k) * stride] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b;
    }
    return a[0] + x * b1 - b2;
}

inline Complex fourier_horner(const Complex* c, int n, int stride, double ang) {
    const Complex I(0.0, 1.0);
    const Complex w = std::exp(I * ang);
    Complex acc(0.0, 0.0);
    for (int t = n - 1; t >= 0; --t) acc = acc * w + c[static_cast<std::size_t>(t) * stride];
    return acc * std::exp(-I * (static_cast<double>(n / 2) * ang));
}

} // namespace detail
} // namespace ballkit
