#include "ballkit/banded.hpp"

#include <algorithm>
#include <cmath>

namespace ballkit {

void BandedMatrix::apply(const Complex* x, Complex* y) const {
    for (int r = 0; r < n_; ++r) {
        Complex acc(0.0, 0.0);
        const int clo = std::max(0, r - kl_);
        const int chi = std::min(n_ - 1, r + ku_);
        for (int c = clo; c <= chi; ++c) acc += band_[slot(r, c)] * x[c];
        y[r] = acc;
    }
}

std::vector<Complex> BandedMatrix::apply(const std::vector<Complex>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw InvalidSizeError("BandedMatrix::apply: length mismatch");
    std::vector<Complex> y(x.size());
    apply(x.data(), y.data());
    return y;
}

BandedMatrix BandedMatrix::times(const BandedMatrix& B) const {
    if (B.n_ != n_) throw InvalidSizeError("BandedMatrix::times: size mismatch");
    BandedMatrix C(n_, std::min(n_ - 1, kl_ + B.kl_), std::min(n_ - 1, ku_ + B.ku_));
    for (int r = 0; r < n_; ++r) {
        const int klo = std::max(0, r - kl_);
        const int khi = std::min(n_ - 1, r + ku_);
        for (int k = klo; k <= khi; ++k) {
            const Complex a = band_[slot(r, k)];
            if (a == Complex(0.0, 0.0)) continue;
            const int clo = std::max(0, k - B.kl_);
            const int chi = std::min(n_ - 1, k + B.ku_);
            for (int c = clo; c <= chi; ++c) C.at(r, c) += a * B.band_[B.slot(k, c)];
        }
    }
    return C;
}

BandedMatrix BandedMatrix::plus(const BandedMatrix& B) const {
    if (B.n_ != n_) throw InvalidSizeError("BandedMatrix::plus: size mismatch");
    BandedMatrix C(n_, std::max(kl_, B.kl_), std::max(ku_, B.ku_));
    for (int r = 0; r < n_; ++r) {
        const int clo = std::max(0, r - C.kl_);
        const int chi = std::min(n_ - 1, r + C.ku_);
        for (int c = clo; c <= chi; ++c) C.at(r, c) = get(r, c) + B.get(r, c);
    }
    return C;
}

BandedMatrix BandedMatrix::scaled(Complex s) const {
    BandedMatrix C = *this;
    for (Complex& z : C.band_) z *= s;
    return C;
}

BandedMatrix BandedMatrix::shifted(Complex s) const {
    BandedMatrix C = *this;
    for (int r = 0; r < n_; ++r) C.at(r, r) += s;
    return C;
}

BandedMatrix BandedMatrix::transposed() const {
    BandedMatrix C(n_, ku_, kl_);
    for (int r = 0; r < n_; ++r) {
        const int clo = std::max(0, r - kl_);
        const int chi = std::min(n_ - 1, r + ku_);
        for (int c = clo; c <= chi; ++c) C.at(c, r) = band_[slot(r, c)];
    }
    return C;
}

// Classic GB factorization: band storage with kl extra superdiagonal rows
// to absorb fill from row swaps.  Row r of column c sits at offset
// kl + ku + r - c, 0 <= c - r <= kl + ku after fill.
BandedLU::BandedLU(const BandedMatrix& A)
    : n_(A.size()), kl_(A.lower()), ku_(A.upper()),
      width_(2 * A.lower() + A.upper() + 1),
      lu_(static_cast<std::size_t>(width_) * A.size(), Complex(0.0, 0.0)),
      piv_(A.size()) {
    auto entry = [&](int r, int c) -> Complex& {
        return lu_[static_cast<std::size_t>(kl_ + ku_ + r - c) +
                   static_cast<std::size_t>(c) * width_];
    };
    for (int c = 0; c < n_; ++c) {
        const int rlo = std::max(0, c - ku_);
        const int rhi = std::min(n_ - 1, c + kl_);
        for (int r = rlo; r <= rhi; ++r) entry(r, c) = A.get(r, c);
    }

    const int kv = kl_ + ku_; // upper bandwidth after pivoting
    for (int j = 0; j < n_; ++j) {
        // Pivot search in column j, rows j..j+kl.
        int pr = j;
        double best = std::abs(entry(j, j));
        for (int r = j + 1; r <= std::min(n_ - 1, j + kl_); ++r) {
            const double v = std::abs(entry(r, j));
            if (v > best) {
                best = v;
                pr = r;
            }
        }
        piv_[j] = pr;
        if (best == 0.0)
            throw SolverError("banded LU: matrix is singular at column " + std::to_string(j));
        if (pr != j) {
            for (int c = j; c <= std::min(n_ - 1, j + kv); ++c)
                std::swap(entry(j, c), entry(pr, c));
        }
        const Complex d = entry(j, j);
        for (int r = j + 1; r <= std::min(n_ - 1, j + kl_); ++r) {
            const Complex l = entry(r, j) / d;
            entry(r, j) = l;
            for (int c = j + 1; c <= std::min(n_ - 1, j + kv); ++c)
                entry(r, c) -= l * entry(j, c);
        }
    }
}

void BandedLU::solve_inplace(Complex* b) const {
    auto entry = [&](int r, int c) -> const Complex& {
        return lu_[static_cast<std::size_t>(kl_ + ku_ + r - c) +
                   static_cast<std::size_t>(c) * width_];
    };
    for (int j = 0; j < n_; ++j) {
        if (piv_[j] != j) std::swap(b[j], b[piv_[j]]);
        for (int r = j + 1; r <= std::min(n_ - 1, j + kl_); ++r)
            b[r] -= entry(r, j) * b[j];
    }
    const int kv = kl_ + ku_;
    for (int j = n_ - 1; j >= 0; --j) {
        for (int c = j + 1; c <= std::min(n_ - 1, j + kv); ++c)
            b[j] -= entry(j, c) * b[c];
        b[j] /= entry(j, j);
    }
}

std::vector<Complex> BandedLU::solve(std::vector<Complex> b) const {
    if (static_cast<int>(b.size()) != n_)
        throw InvalidSizeError("BandedLU::solve: length mismatch");
    solve_inplace(b.data());
    return b;
}

} // namespace ballkit
