#pragma once

#include <complex>
#include <vector>

#include "core/errors.hpp"

namespace bo2d {

/// Discretization of the line: n samples on [-W, W), evaluated spectrally on
/// a pad_factor-times larger zero-padded window so the nonlocal operators
/// (H, D^alpha) see negligible wrap-around for decaying functions.
struct LineGrid {
    int n = 1024;
    double W = 64.0;
    int pad_factor = 4;

    LineGrid() = default;
    LineGrid(int n_, double W_, int pad_ = 4);

    double dx() const { return 2.0 * W / n; }
    double x(int i) const { return -W + i * dx(); }
    int padded_n() const { return n * pad_factor; }
    /// Frequency of padded-array index k.
    double xi(int k) const;
};

using RealFn = std::vector<double>;

/// Largest |f| over the outermost two samples on each side, relative to
/// max|f|; the decay precondition demands <= 1e-8.
double edge_fraction(const RealFn& f);
void require_edge_decay(const RealFn& f, const char* who);

/// Spectral application of a symbol sampled on the padded window (size
/// padded_n, FFT index order); result restricted back to the window.
RealFn apply_line_symbol(const RealFn& f, const LineGrid& grid,
                         const std::vector<std::complex<double>>& symbol);

std::vector<std::complex<double>> hilbert_line_symbol(const LineGrid& grid);
std::vector<std::complex<double>> frac_deriv_line_symbol(const LineGrid& grid, double alpha);
std::vector<std::complex<double>> deriv_line_symbol(const LineGrid& grid, int m);

/// H f with symbol -i sign(xi); consistent with (1/pi) p.v. int f(y)/(x-y) dy.
/// EdgeMassError when the decay precondition fails.
RealFn hilbert_line(const RealFn& f, const LineGrid& grid);

/// |xi|^alpha (alpha may be negative; the padded zero frequency is left at 0).
RealFn frac_deriv_line(const RealFn& f, const LineGrid& grid, double alpha);

/// (i xi)^m, Nyquist zeroed.
RealFn deriv_line(const RealFn& f, const LineGrid& grid, int m = 1);

/// Riemann-sum L^p norm over the window, p in (1, inf).
double lp_norm_line(const RealFn& f, const LineGrid& grid, double p);
double max_abs_line(const RealFn& f);

}  // namespace bo2d
