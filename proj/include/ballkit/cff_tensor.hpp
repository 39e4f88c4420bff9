#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ballkit/errors.hpp"

namespace ballkit {

using Complex = std::complex<double>;

// Dense rank-3 complex tensor used both for Chebyshev x Fourier x Fourier
// coefficients and for values on the doubled tensor grid.
//
// Layout: entry (i, j, k) lives at data[i + m*(j + n*k)], i.e. the radial
// index is fastest.  For coefficient tensors the angular slots carry the
// Fourier modes in increasing order: slot j holds azimuthal mode j - n/2,
// slot k holds polar mode k - p/2, so n and p must be even there.  The
// radial slot i holds the Chebyshev degree directly.
class CffTensor {
public:
    CffTensor() = default;

    CffTensor(int m, int n, int p)
        : m_(m), n_(n), p_(p),
          data_(check_extent(m, n, p), Complex(0.0, 0.0)) {}

    int m() const { return m_; }
    int n() const { return n_; }
    int p() const { return p_; }
    bool empty() const { return data_.empty(); }
    std::size_t size() const { return data_.size(); }

    Complex& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
    const Complex& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

    // Mode-indexed access for coefficient tensors: jmode in [-n/2, n/2-1],
    // kmode in [-p/2, p/2-1].
    Complex& mode(int i, int jmode, int kmode) {
        return data_[index(i, jmode + n_ / 2, kmode + p_ / 2)];
    }
    const Complex& mode(int i, int jmode, int kmode) const {
        return data_[index(i, jmode + n_ / 2, kmode + p_ / 2)];
    }

    std::vector<Complex>& data() { return data_; }
    const std::vector<Complex>& data() const { return data_; }

    bool same_shape(const CffTensor& o) const {
        return m_ == o.m_ && n_ == o.n_ && p_ == o.p_;
    }

    double max_abs() const {
        double v = 0.0;
        for (const Complex& z : data_) v = std::max(v, std::abs(z));
        return v;
    }

    // Mode-preserving resize of a coefficient tensor.  Radial degrees and
    // Fourier modes present in both shapes are copied; everything else is
    // zero.  Both the source and target angular sizes must be even.
    CffTensor resized(int m2, int n2, int p2) const {
        require_even_angular();
        CffTensor out(m2, n2, p2);
        if ((n2 & 1) || (p2 & 1))
            throw InvalidSizeError("resized: target angular sizes must be even");
        const int mi = std::min(m_, m2);
        const int jlo = -std::min(n_, n2) / 2, jhi = std::min(n_, n2) / 2 - 1;
        const int klo = -std::min(p_, p2) / 2, khi = std::min(p_, p2) / 2 - 1;
        for (int k = klo; k <= khi; ++k)
            for (int j = jlo; j <= jhi; ++j)
                for (int i = 0; i < mi; ++i)
                    out.mode(i, j, k) = mode(i, j, k);
        return out;
    }

    void require_even_angular() const {
        if ((n_ & 1) || (p_ & 1))
            throw InvalidSizeError("coefficient tensor requires even Fourier sizes, got " +
                                   std::to_string(n_) + " x " + std::to_string(p_));
        if (m_ < 1 || n_ < 2 || p_ < 2)
            throw InvalidSizeError("coefficient tensor requires m >= 1, n,p >= 2");
    }

private:
    static std::size_t check_extent(int m, int n, int p) {
        if (m < 0 || n < 0 || p < 0)
            throw InvalidSizeError("negative tensor extent");
        return static_cast<std::size_t>(m) * static_cast<std::size_t>(n) *
               static_cast<std::size_t>(p);
    }

    std::size_t index(int i, int j, int k) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(m_) *
                   (static_cast<std::size_t>(j) +
                    static_cast<std::size_t>(n_) * static_cast<std::size_t>(k));
    }

    int m_ = 0, n_ = 0, p_ = 0;
    std::vector<Complex> data_;
};

} // namespace ballkit
