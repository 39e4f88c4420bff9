#pragma once

#include <vector>

#include "ballkit/cff_tensor.hpp"

namespace ballkit {

// Square complex banded matrix with kl sub- and ku superdiagonals.
// Entry (r, c) is stored iff -ku <= r - c <= kl.
class BandedMatrix {
public:
    BandedMatrix(int n, int kl, int ku)
        : n_(n), kl_(kl), ku_(ku),
          band_(static_cast<std::size_t>(n) * (kl + ku + 1), Complex(0.0, 0.0)) {
        if (n < 1 || kl < 0 || ku < 0)
            throw InvalidSizeError("BandedMatrix: bad shape");
    }

    int size() const { return n_; }
    int lower() const { return kl_; }
    int upper() const { return ku_; }

    Complex& at(int r, int c) {
        if (!inside(r, c))
            throw InvalidSizeError("BandedMatrix::at outside band");
        return band_[slot(r, c)];
    }
    Complex get(int r, int c) const {
        if (r < 0 || r >= n_ || c < 0 || c >= n_ || !inside(r, c))
            return Complex(0.0, 0.0);
        return band_[slot(r, c)];
    }

    // y = A x (x, y length n, distinct or aliased unsafe: y must differ).
    void apply(const Complex* x, Complex* y) const;
    std::vector<Complex> apply(const std::vector<Complex>& x) const;

    BandedMatrix times(const BandedMatrix& B) const;
    BandedMatrix plus(const BandedMatrix& B) const;
    BandedMatrix scaled(Complex s) const;
    BandedMatrix shifted(Complex s) const; // A + s*I
    BandedMatrix transposed() const;

private:
    bool inside(int r, int c) const {
        const int d = r - c;
        return d <= kl_ && -d <= ku_;
    }
    // Column-major band storage, row offset within column: ku + r - c.
    std::size_t slot(int r, int c) const {
        return static_cast<std::size_t>(ku_ + r - c) +
               static_cast<std::size_t>(c) * (kl_ + ku_ + 1);
    }

    int n_, kl_, ku_;
    std::vector<Complex> band_;
};

// LU factorization with partial pivoting of a banded matrix (the factored
// upper bandwidth grows to kl + ku).  Solves are O(n * (kl + ku)).
class BandedLU {
public:
    explicit BandedLU(const BandedMatrix& A);

    int size() const { return n_; }
    void solve_inplace(Complex* b) const;
    std::vector<Complex> solve(std::vector<Complex> b) const;

private:
    int n_, kl_, ku_;
    int width_;                 // 2*kl + ku + 1 rows of band storage
    std::vector<Complex> lu_;   // column-major, leading dimension width_
    std::vector<int> piv_;
};

} // namespace ballkit
