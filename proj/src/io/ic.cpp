#include "io/ic.hpp"

#include <cmath>
#include <numbers>

#include "core/multipliers.hpp"
#include "evolution/checkpoint.hpp"
#include "props/family.hpp"

namespace bo2d {

namespace {

RealField gaussian_samples(const GridPtr& grid, const InitialCondition& ic) {
    RealField f(grid);
    const auto& g = *grid;
    for (int ix = 0; ix < g.nx(); ++ix) {
        const double dxc = g.x(ix) - ic.center_x;
        const double ex = std::exp(-0.5 * dxc * dxc / (ic.sigma_x * ic.sigma_x));
        for (int iy = 0; iy < g.ny(); ++iy) {
            const double dyc = g.y(iy) - ic.center_y;
            f.values[g.index(ix, iy)] =
                ic.amplitude * ex * std::exp(-0.5 * dyc * dyc / (ic.sigma_y * ic.sigma_y));
        }
    }
    return f;
}

}  // namespace

SpectralField initial_spectral_state(const GridPtr& grid, const InitialCondition& ic) {
    const auto& g = *grid;
    switch (ic.kind) {
        case IcKind::Gaussian:
            return forward_transform(gaussian_samples(grid, ic));
        case IcKind::DxGaussian: {
            SpectralField hat = deriv(forward_transform(gaussian_samples(grid, ic)), Axis::X);
            for (int iy = 0; iy < g.ny(); ++iy)
                hat.coeffs[g.index(0, iy)] = Complex(0.0, 0.0);
            return hat;
        }
        case IcKind::CosProduct: {
            if (std::abs(ic.mode_m) >= g.nx() / 2 || std::abs(ic.mode_n) >= g.ny() / 2)
                fail(ErrorCode::BadICParams, "cos_product: mode indices beyond the lattice");
            RealField f(grid);
            const double kx = 2.0 * std::numbers::pi * ic.mode_m / g.Lx();
            const double ky = 2.0 * std::numbers::pi * ic.mode_n / g.Ly();
            for (int ix = 0; ix < g.nx(); ++ix)
                for (int iy = 0; iy < g.ny(); ++iy)
                    f.values[g.index(ix, iy)] =
                        ic.amplitude * std::cos(kx * g.x(ix)) * std::cos(ky * g.y(iy));
            return forward_transform(f);
        }
        case IcKind::RandomBand: {
            SpectralField hat(grid, /*real_tag=*/true);
            GaussianRng rng(mix_seed(ic.seed, 0xb0, 0x2d));
            for (int m = 0; m <= ic.band_m; ++m) {
                for (int n = -ic.band_n; n <= ic.band_n; ++n) {
                    if (m == 0 && n <= 0) continue;  // half lattice; DC stays zero
                    const Complex c(rng.normal(), rng.normal());
                    hat.mode(m, n) = c;
                    hat.mode(-m, -n) = std::conj(c);
                }
            }
            const double norm = l2_norm(hat);
            if (norm > 0.0) {
                const double scale = ic.amplitude / norm;
                for (auto& c : hat.coeffs) c *= scale;
            }
            return hat;
        }
        case IcKind::Checkpoint: {
            SimState st = read_checkpoint(ic.path);
            if (!st.grid->same_geometry(g))
                fail(ErrorCode::BadICParams, "checkpoint ic: grid mismatch with config");
            return std::move(st.field);
        }
    }
    fail(ErrorCode::BadICParams, "unknown initial condition");
}

RealField build_ic(const GridPtr& grid, const InitialCondition& ic) {
    return inverse_transform(initial_spectral_state(grid, ic));
}

}  // namespace bo2d
