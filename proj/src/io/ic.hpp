#pragma once

#include "io/config.hpp"

namespace bo2d {

/// Deterministic initial spectral state. dx_gaussian applies the spectral
/// x-derivative to a Gaussian, so its kx = 0 row is exactly zero (the
/// discrete realization of the zero-x-mean hypothesis); random_band is
/// bitwise reproducible from its seed.
SpectralField initial_spectral_state(const GridPtr& grid, const InitialCondition& ic);

/// Physical samples of the initial state (inverse transform of the above).
RealField build_ic(const GridPtr& grid, const InitialCondition& ic);

}  // namespace bo2d
