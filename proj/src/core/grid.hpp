#pragma once

#include <cmath>
#include <memory>
#include <vector>

#include "core/errors.hpp"

namespace bo2d {

/// Periodic box geometry and its wavenumber lattice, shared by all fields.
///
/// Physical samples live at x_i = -Lx/2 + i*Lx/nx, y_j analogous; spectral
/// coefficients are indexed in FFT order, where array index i carries the
/// integer mode m = i for i < nx/2 and m = i - nx otherwise (so the Nyquist
/// index nx/2 is the mode m = -nx/2). kx[m] = 2*pi*m/Lx, likewise ky.
class SpectralGrid {
public:
    SpectralGrid(int nx, int ny, double Lx, double Ly);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double Lx() const { return Lx_; }
    double Ly() const { return Ly_; }

    std::size_t size() const { return static_cast<std::size_t>(nx_) * ny_; }
    std::size_t index(int ix, int iy) const {
        return static_cast<std::size_t>(ix) * ny_ + iy;
    }

    double x(int ix) const { return -0.5 * Lx_ + ix * (Lx_ / nx_); }
    double y(int iy) const { return -0.5 * Ly_ + iy * (Ly_ / ny_); }

    /// Signed integer mode carried by spectral array index i (x axis).
    int mode_m(int ix) const { return ix < nx_ / 2 ? ix : ix - nx_; }
    int mode_n(int iy) const { return iy < ny_ / 2 ? iy : iy - ny_; }

    /// Spectral array index of signed mode m in [-nx/2, nx/2).
    int index_of_mode_m(int m) const { return m >= 0 ? m : m + nx_; }
    int index_of_mode_n(int n) const { return n >= 0 ? n : n + ny_; }

    double kx(int ix) const { return kx_[ix]; }
    double ky(int iy) const { return ky_[iy]; }
    const std::vector<double>& kx_all() const { return kx_; }
    const std::vector<double>& ky_all() const { return ky_; }

    /// Continuum-integral quadrature weight Lx*Ly/(nx*ny).
    double cell_area() const { return Lx_ * Ly_ / (static_cast<double>(nx_) * ny_); }

    bool same_geometry(const SpectralGrid& other) const {
        return nx_ == other.nx_ && ny_ == other.ny_ && Lx_ == other.Lx_ && Ly_ == other.Ly_;
    }

private:
    int nx_, ny_;
    double Lx_, Ly_;
    std::vector<double> kx_, ky_;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

GridPtr make_grid(int nx, int ny, double Lx, double Ly);

}  // namespace bo2d
