#pragma once

#include <complex>
#include <vector>

#include "core/grid.hpp"

namespace bo2d {

using Complex = std::complex<double>;

/// Physical-space samples of a state, row-major [ix][iy].
struct RealField {
    GridPtr grid;
    std::vector<double> values;

    RealField() = default;
    explicit RealField(GridPtr g) : grid(std::move(g)), values(grid->size(), 0.0) {}

    double& at(int ix, int iy) { return values[grid->index(ix, iy)]; }
    double at(int ix, int iy) const { return values[grid->index(ix, iy)]; }
};

/// Fourier coefficients of a state, FFT index order, row-major [ix][iy].
/// `represents_real` tags fields that are transforms of real data and are
/// expected to satisfy coeffs(-m,-n) = conj(coeffs(m,n)).
struct SpectralField {
    GridPtr grid;
    std::vector<Complex> coeffs;
    bool represents_real = false;

    SpectralField() = default;
    explicit SpectralField(GridPtr g, bool real_tag = false)
        : grid(std::move(g)), coeffs(grid->size(), Complex(0.0, 0.0)), represents_real(real_tag) {}

    Complex& at_index(int ix, int iy) { return coeffs[grid->index(ix, iy)]; }
    Complex at_index(int ix, int iy) const { return coeffs[grid->index(ix, iy)]; }

    /// Access by signed mode pair (m, n).
    Complex& mode(int m, int n) {
        return coeffs[grid->index(grid->index_of_mode_m(m), grid->index_of_mode_n(n))];
    }
    Complex mode(int m, int n) const {
        return coeffs[grid->index(grid->index_of_mode_m(m), grid->index_of_mode_n(n))];
    }
};

/// coeffs(m,n) = (Lx*Ly/(nx*ny)) * sum_{i,j} f(x_i,y_j) e^{-i(kx x_i + ky y_j)}.
/// The continuum-integral normalization: coefficients approximate the integral
/// transform of the box-periodic function directly.
SpectralField forward_transform(const RealField& f);

/// Exact inverse of forward_transform up to roundoff. Errors with
/// NonHermitianInput when the Hermitian symmetry of the coefficients is
/// violated beyond `tol` relative to the largest coefficient.
RealField inverse_transform(const SpectralField& F, double tol = 1e-10);

/// Largest |coeffs(-m,-n) - conj(coeffs(m,n))| over the lattice.
double hermitian_defect(const SpectralField& F);

/// Largest |coeff| over the lattice.
double max_abs(const SpectralField& F);
double max_abs(const RealField& f);

/// Discrete L2 norm sqrt(sum f^2 * cell_area) / spectral-side equivalent
/// sqrt(sum |coeffs|^2 / (Lx*Ly)); the two agree by Parseval.
double l2_norm(const RealField& f);
double l2_norm(const SpectralField& F);

bool all_finite(const SpectralField& F);

}  // namespace bo2d
