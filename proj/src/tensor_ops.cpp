#include "ballkit/tensor_ops.hpp"

#include <vector>

#include "ballkit/spectral_ops.hpp"

namespace ballkit {

namespace {

// Visit every 1D line along `dim`, copying it through `fn`.
template <typename Fn>
void for_each_line(CffTensor& A, int dim, Fn&& fn) {
    const int m = A.m(), n = A.n(), p = A.p();
    const int len = dim == 0 ? m : dim == 1 ? n : p;
    const std::size_t stride = dim == 0 ? 1
                               : dim == 1 ? static_cast<std::size_t>(m)
                                          : static_cast<std::size_t>(m) * n;
    std::vector<Complex> line(static_cast<std::size_t>(len));
    std::vector<Complex> out(static_cast<std::size_t>(len));
    Complex* data = A.data().data();

    const int o1 = dim == 0 ? n : m;
    const int o2 = dim == 2 ? n : p;
    for (int b = 0; b < o2; ++b) {
        for (int a = 0; a < o1; ++a) {
            std::size_t base;
            if (dim == 0)
                base = static_cast<std::size_t>(m) * (a + static_cast<std::size_t>(n) * b);
            else if (dim == 1)
                base = static_cast<std::size_t>(a) +
                       static_cast<std::size_t>(m) * n * static_cast<std::size_t>(b);
            else
                base = static_cast<std::size_t>(a) + static_cast<std::size_t>(m) * b;
            for (int s = 0; s < len; ++s) line[s] = data[base + stride * s];
            fn(line, out);
            for (int s = 0; s < len; ++s) data[base + stride * s] = out[s];
        }
    }
}

} // namespace

void apply_along(CffTensor& A, const BandedMatrix& M, int dim) {
    const int len = dim == 0 ? A.m() : dim == 1 ? A.n() : A.p();
    if (M.size() != len)
        throw InvalidSizeError("apply_along: operator size does not match dimension");
    for_each_line(A, dim, [&](const std::vector<Complex>& in, std::vector<Complex>& out) {
        M.apply(in.data(), out.data());
    });
}

void solve_along(CffTensor& A, const BandedLU& lu, int dim) {
    const int len = dim == 0 ? A.m() : dim == 1 ? A.n() : A.p();
    if (lu.size() != len)
        throw InvalidSizeError("solve_along: factorization size does not match dimension");
    for_each_line(A, dim, [&](const std::vector<Complex>& in, std::vector<Complex>& out) {
        out = in;
        lu.solve_inplace(out.data());
    });
}

void cheb_diff_radial(CffTensor& A) {
    for_each_line(A, 0, [&](const std::vector<Complex>& in, std::vector<Complex>& out) {
        out = cheb_diff(in);
    });
}

void scale_by_mode(CffTensor& A, int dim, const std::function<Complex(int)>& s) {
    const int m = A.m(), n = A.n(), p = A.p();
    if (dim == 1) {
        for (int k = 0; k < p; ++k)
            for (int j = 0; j < n; ++j) {
                const Complex f = s(j - n / 2);
                for (int i = 0; i < m; ++i) A(i, j, k) *= f;
            }
    } else if (dim == 2) {
        for (int k = 0; k < p; ++k) {
            const Complex f = s(k - p / 2);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < m; ++i) A(i, j, k) *= f;
        }
    } else {
        throw InvalidSizeError("scale_by_mode: dim must be 1 or 2");
    }
}

} // namespace ballkit
