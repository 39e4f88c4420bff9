#include "ballkit/transforms.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace ballkit {
namespace {

// FFTW plan creation is not thread safe; execution on caller-owned buffers
// via the new-array interface is.  Plans are cached per transform size and
// created with FFTW_UNALIGNED so any heap buffer is acceptable.
class PlanCache {
public:
    fftw_plan dft(int n, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n, sign);
        auto it = dft_.find(key);
        if (it != dft_.end()) return it->second;
        std::vector<fftw_complex> buf(static_cast<std::size_t>(n));
        fftw_plan p = fftw_plan_dft_1d(n, buf.data(), buf.data(), sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        dft_.emplace(key, p);
        return p;
    }

    // REDFT00 of logical length len (len >= 2).
    fftw_plan dct1(int len) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = dct_.find(len);
        if (it != dct_.end()) return it->second;
        std::vector<double> buf(static_cast<std::size_t>(len));
        fftw_plan p = fftw_plan_r2r_1d(len, buf.data(), buf.data(), FFTW_REDFT00,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        dct_.emplace(len, p);
        return p;
    }

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, fftw_plan> dft_;
    std::map<int, fftw_plan> dct_;
};

PlanCache& plans() {
    static PlanCache cache;
    return cache;
}

// Apply the Fourier analysis fixup along one angular dimension of A.
// Grid nodes start at -pi, so the plain DFT needs an fftshift and an
// alternating sign on top of the 1/n scale:
//   c_j = (-1)^j / n * DFT(v)[j mod n],  stored at slot j + n/2.
void fourier_analysis_dim(CffTensor& A, int dim) {
    const int m = A.m(), n = A.n(), p = A.p();
    const int len = dim == 1 ? n : p;
    const std::size_t stride = dim == 1 ? static_cast<std::size_t>(m)
                                        : static_cast<std::size_t>(m) * n;
    fftw_plan plan = plans().dft(len, FFTW_FORWARD);

    std::vector<fftw_complex> buf(static_cast<std::size_t>(len));
    std::vector<Complex> out(static_cast<std::size_t>(len));
    Complex* data = A.data().data();

    const int outer = dim == 1 ? p : n;
    const int inner = m;
    for (int o = 0; o < outer; ++o) {
        for (int i = 0; i < inner; ++i) {
            const std::size_t base =
                dim == 1 ? static_cast<std::size_t>(i) + static_cast<std::size_t>(m) * n * o
                         : static_cast<std::size_t>(i) + static_cast<std::size_t>(m) * o;
            for (int s = 0; s < len; ++s) {
                const Complex& z = data[base + stride * s];
                buf[s][0] = z.real();
                buf[s][1] = z.imag();
            }
            fftw_execute_dft(plan, buf.data(), buf.data());
            for (int t = 0; t < len; ++t) {
                const int jm = t - len / 2; // signed mode
                const int q = ((jm % len) + len) % len;
                double sign = (jm % 2 == 0) ? 1.0 : -1.0;
                out[t] = sign / len * Complex(buf[q][0], buf[q][1]);
            }
            for (int t = 0; t < len; ++t) data[base + stride * t] = out[t];
        }
    }
}

// Inverse of fourier_analysis_dim.
void fourier_synthesis_dim(CffTensor& A, int dim) {
    const int m = A.m(), n = A.n(), p = A.p();
    const int len = dim == 1 ? n : p;
    const std::size_t stride = dim == 1 ? static_cast<std::size_t>(m)
                                        : static_cast<std::size_t>(m) * n;
    fftw_plan plan = plans().dft(len, FFTW_BACKWARD);

    std::vector<fftw_complex> buf(static_cast<std::size_t>(len));
    Complex* data = A.data().data();

    const int outer = dim == 1 ? p : n;
    const int inner = m;
    for (int o = 0; o < outer; ++o) {
        for (int i = 0; i < inner; ++i) {
            const std::size_t base =
                dim == 1 ? static_cast<std::size_t>(i) + static_cast<std::size_t>(m) * n * o
                         : static_cast<std::size_t>(i) + static_cast<std::size_t>(m) * o;
            // Undo shift and sign: place (-1)^j c_j at DFT bin j mod len.
            for (int t = 0; t < len; ++t) {
                const int jm = t - len / 2;
                const int q = ((jm % len) + len) % len;
                double sign = (jm % 2 == 0) ? 1.0 : -1.0;
                const Complex z = sign * data[base + stride * t];
                buf[q][0] = z.real();
                buf[q][1] = z.imag();
            }
            fftw_execute_dft(plan, buf.data(), buf.data());
            for (int s = 0; s < len; ++s)
                data[base + stride * s] = Complex(buf[s][0], buf[s][1]);
        }
    }
}

// Chebyshev analysis along the radial dimension (values at cos(a*pi/(m-1)),
// descending).  Uses DCT-I on real and imaginary parts separately.
void chebyshev_analysis(CffTensor& A) {
    const int m = A.m(), n = A.n(), p = A.p();
    if (m == 1) return; // T_0 only; coefficient equals the sample
    const int N = m - 1;
    fftw_plan plan = plans().dct1(m);

    std::vector<double> re(static_cast<std::size_t>(m)), im(re);
    Complex* data = A.data().data();
    const std::size_t lines = static_cast<std::size_t>(n) * p;
    for (std::size_t l = 0; l < lines; ++l) {
        Complex* line = data + l * m;
        for (int a = 0; a < m; ++a) {
            re[a] = line[a].real();
            im[a] = line[a].imag();
        }
        fftw_execute_r2r(plan, re.data(), re.data());
        fftw_execute_r2r(plan, im.data(), im.data());
        for (int q = 0; q < m; ++q) {
            double s = (q == 0 || q == N) ? 0.5 : 1.0;
            line[q] = s / N * Complex(re[q], im[q]);
        }
    }
}

void chebyshev_synthesis(CffTensor& A) {
    const int m = A.m(), n = A.n(), p = A.p();
    if (m == 1) return;
    const int N = m - 1;
    fftw_plan plan = plans().dct1(m);

    std::vector<double> re(static_cast<std::size_t>(m)), im(re);
    Complex* data = A.data().data();
    const std::size_t lines = static_cast<std::size_t>(n) * p;
    for (std::size_t l = 0; l < lines; ++l) {
        Complex* line = data + l * m;
        for (int q = 0; q < m; ++q) {
            double s = (q == 0 || q == N) ? 1.0 : 0.5;
            re[q] = s * line[q].real();
            im[q] = s * line[q].imag();
        }
        fftw_execute_r2r(plan, re.data(), re.data());
        fftw_execute_r2r(plan, im.data(), im.data());
        for (int a = 0; a < m; ++a) line[a] = Complex(re[a], im[a]);
    }
}

void check_shape(const CffTensor& A) {
    A.require_even_angular();
}

} // namespace

CffTensor vals2coeffs(const CffTensor& vals) {
    check_shape(vals);
    CffTensor A = vals;
    chebyshev_analysis(A);
    fourier_analysis_dim(A, 1);
    fourier_analysis_dim(A, 2);
    return A;
}

CffTensor coeffs2vals(const CffTensor& coeffs) {
    check_shape(coeffs);
    CffTensor A = coeffs;
    fourier_synthesis_dim(A, 2);
    fourier_synthesis_dim(A, 1);
    chebyshev_synthesis(A);
    return A;
}

} // namespace ballkit
