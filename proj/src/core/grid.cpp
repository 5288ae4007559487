#include "core/grid.hpp"

#include <numbers>

namespace bo2d {

SpectralGrid::SpectralGrid(int nx, int ny, double Lx, double Ly)
    : nx_(nx), ny_(ny), Lx_(Lx), Ly_(Ly) {
    if (nx < 4 || ny < 4 || nx % 2 != 0 || ny % 2 != 0)
        fail(ErrorCode::InvalidArgument, "grid dimensions must be even and >= 4");
    if (!(Lx > 0.0) || !(Ly > 0.0) || !std::isfinite(Lx) || !std::isfinite(Ly))
        fail(ErrorCode::InvalidArgument, "box side lengths must be positive and finite");

    kx_.resize(nx);
    ky_.resize(ny);
    const double two_pi = 2.0 * std::numbers::pi;
    for (int i = 0; i < nx; ++i) kx_[i] = two_pi * mode_m(i) / Lx;
    for (int j = 0; j < ny; ++j) ky_[j] = two_pi * mode_n(j) / Ly;
}

GridPtr make_grid(int nx, int ny, double Lx, double Ly) {
    return std::make_shared<SpectralGrid>(nx, ny, Lx, Ly);
}

}  // namespace bo2d
