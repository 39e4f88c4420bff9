#include "ballkit/spectral_ops.hpp"

namespace ballkit {

namespace {
const Complex I(0.0, 1.0);
}

BandedMatrix fourier_deriv(int n) {
    BandedMatrix D(n, 0, 0);
    for (int t = 0; t < n; ++t) D.at(t, t) = I * static_cast<double>(t - n / 2);
    return D;
}

BandedMatrix fourier_mult_cos(int n) {
    // e^{i th} and e^{-i th} each contribute 1/2: out_k takes from modes k-1, k+1.
    BandedMatrix M(n, 1, 1);
    for (int t = 0; t < n; ++t) {
        if (t - 1 >= 0) M.at(t, t - 1) = 0.5;
        if (t + 1 < n) M.at(t, t + 1) = 0.5;
    }
    return M;
}

BandedMatrix fourier_mult_sin(int n) {
    // sin = (e^{i th} - e^{-i th}) / (2i): out_k = (c_{k-1} - c_{k+1}) / (2i).
    BandedMatrix M(n, 1, 1);
    for (int t = 0; t < n; ++t) {
        if (t - 1 >= 0) M.at(t, t - 1) = -0.5 * I;
        if (t + 1 < n) M.at(t, t + 1) = 0.5 * I;
    }
    return M;
}

BandedMatrix fourier_mult_sin2(int n) {
    // sin^2 = 1/2 - (e^{2i th} + e^{-2i th})/4.
    BandedMatrix M(n, 2, 2);
    for (int t = 0; t < n; ++t) {
        M.at(t, t) = 0.5;
        if (t - 2 >= 0) M.at(t, t - 2) = -0.25;
        if (t + 2 < n) M.at(t, t + 2) = -0.25;
    }
    return M;
}

BandedMatrix fourier_mult_sincos(int n) {
    // sin cos = (e^{2i th} - e^{-2i th}) / (4i): out_k = (c_{k-2} - c_{k+2})/(4i).
    BandedMatrix M(n, 2, 2);
    for (int t = 0; t < n; ++t) {
        if (t - 2 >= 0) M.at(t, t - 2) = -0.25 * I;
        if (t + 2 < n) M.at(t, t + 2) = 0.25 * I;
    }
    return M;
}

BandedMatrix cheb_mult_r(int m) {
    // r T_0 = T_1, r T_k = (T_{k+1} + T_{k-1})/2.
    BandedMatrix M(m, 1, 1);
    if (m == 1) return M; // multiplication by r truncated to degree 0: zero
    M.at(1, 0) = 1.0;
    for (int c = 1; c < m; ++c) {
        if (c + 1 < m) M.at(c + 1, c) = 0.5;
        M.at(c - 1, c) = 0.5;
    }
    return M;
}

std::vector<Complex> cheb_diff(const std::vector<Complex>& c) {
    const int m = static_cast<int>(c.size());
    std::vector<Complex> d(c.size(), Complex(0.0, 0.0));
    if (m < 2) return d;
    // Backward recurrence: d_{k-1} = d_{k+1} + 2k c_k, halve d_0.
    for (int k = m - 1; k >= 1; --k)
        d[k - 1] = (k + 1 < m ? d[k + 1] : Complex(0.0, 0.0)) + 2.0 * k * c[k];
    d[0] *= 0.5;
    return d;
}

BandedMatrix ultra_D1(int m) {
    BandedMatrix D(m, 0, 1);
    for (int i = 0; i + 1 < m; ++i) D.at(i, i + 1) = static_cast<double>(i + 1);
    return D;
}

BandedMatrix ultra_D2(int m) {
    BandedMatrix D(m, 0, 2);
    for (int i = 0; i + 2 < m; ++i) D.at(i, i + 2) = 2.0 * (i + 2);
    return D;
}

BandedMatrix ultra_S0(int m) {
    BandedMatrix S(m, 0, 2);
    for (int i = 0; i < m; ++i) {
        S.at(i, i) = i == 0 ? 1.0 : 0.5;
        if (i + 2 < m) S.at(i, i + 2) = -0.5;
    }
    return S;
}

BandedMatrix ultra_S1(int m) {
    BandedMatrix S(m, 0, 2);
    for (int i = 0; i < m; ++i) {
        S.at(i, i) = 1.0 / (i + 1);
        if (i + 2 < m) S.at(i, i + 2) = -1.0 / (i + 3);
    }
    return S;
}

BandedMatrix ultra_mult_r_c2(int m) {
    // r C^(2)_k = (k+1)/(2(k+2)) C^(2)_{k+1} + (k+3)/(2(k+2)) C^(2)_{k-1}.
    BandedMatrix M(m, 1, 1);
    for (int c = 0; c < m; ++c) {
        if (c + 1 < m) M.at(c + 1, c) = (c + 1.0) / (2.0 * (c + 2.0));
        if (c - 1 >= 0) M.at(c - 1, c) = (c + 3.0) / (2.0 * (c + 2.0));
    }
    return M;
}

BandedMatrix ultra_mult_r2_c2(int m) {
    const BandedMatrix Mr = ultra_mult_r_c2(m);
    return Mr.times(Mr);
}

std::vector<Complex> cheb2leg(const std::vector<Complex>& c) {
    const int p = static_cast<int>(c.size());
    std::vector<Complex> out(c.size(), Complex(0.0, 0.0));
    if (p == 0) return out;
    // Accumulate c_i * (T_i expanded in P_k) using T_{i+1} = 2 t T_i - T_{i-1}
    // and t P_k = ((k+1) P_{k+1} + k P_{k-1})/(2k+1), truncating at degree p-1.
    std::vector<double> prev(c.size(), 0.0), cur(c.size(), 0.0), next(c.size(), 0.0);
    prev[0] = 1.0;
    for (int k = 0; k < p; ++k) out[k] += c[0] * prev[k];
    if (p == 1) return out;
    cur[1] = 1.0;
    for (int k = 0; k < p; ++k) out[k] += c[1] * cur[k];
    for (int i = 2; i < p; ++i) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int k = 0; k < p; ++k) {
            const double v = cur[k];
            if (v == 0.0) continue;
            if (k + 1 < p) next[k + 1] += 2.0 * v * (k + 1.0) / (2.0 * k + 1.0);
            if (k - 1 >= 0) next[k - 1] += 2.0 * v * k / (2.0 * k + 1.0);
        }
        for (int k = 0; k < p; ++k) next[k] -= prev[k];
        for (int k = 0; k < p; ++k) out[k] += c[i] * next[k];
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return out;
}

std::vector<Complex> leg2cheb(const std::vector<Complex>& l) {
    const int p = static_cast<int>(l.size());
    std::vector<Complex> out(l.size(), Complex(0.0, 0.0));
    if (p == 0) return out;
    // P_{k+1} = ((2k+1) t P_k - k P_{k-1})/(k+1) with t acting in the
    // Chebyshev basis: t T_0 = T_1, t T_j = (T_{j+1} + T_{j-1})/2.
    std::vector<double> prev(l.size(), 0.0), cur(l.size(), 0.0), next(l.size(), 0.0);
    prev[0] = 1.0;
    for (int k = 0; k < p; ++k) out[k] += l[0] * prev[k];
    if (p == 1) return out;
    cur[1] = 1.0;
    for (int k = 0; k < p; ++k) out[k] += l[1] * cur[k];
    for (int i = 2; i < p; ++i) {
        std::fill(next.begin(), next.end(), 0.0);
        const int km = i - 1; // P_i from P_{i-1}
        for (int j = 0; j < p; ++j) {
            const double v = cur[j];
            if (v == 0.0) continue;
            const double w = (2.0 * km + 1.0) / (km + 1.0) * v;
            if (j == 0) {
                if (1 < p) next[1] += w;
            } else {
                if (j + 1 < p) next[j + 1] += 0.5 * w;
                next[j - 1] += 0.5 * w;
            }
        }
        for (int j = 0; j < p; ++j) next[j] -= km / (km + 1.0) * prev[j];
        for (int j = 0; j < p; ++j) out[j] += l[i] * next[j];
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return out;
}

} // namespace ballkit
