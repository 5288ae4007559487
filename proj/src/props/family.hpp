#pragma once

#include <cstdint>
#include <random>

#include "props/line.hpp"

namespace bo2d {

/// Deterministic random-function family: band-limited fields with
/// independent standard-normal spectral coefficients under a Gaussian
/// frequency envelope, multiplied by a Gaussian spatial envelope so the
/// samples decay at the window edges, normalized to unit L2. The same
/// (seed, trial, salt) always produces the same function, which makes trial
/// parallelism order-independent.
struct TestFamily {
    std::uint64_t seed = 1;
    int count = 100;
    double band_limit = 0.5;  // active-frequency fraction of the window Nyquist

    RealFn draw(const LineGrid& grid, int trial, std::uint64_t salt = 0) const;
};

/// splitmix64-derived stream, standard-normal via Box-Muller (bit-stable for
/// a fixed platform/libm; std::normal_distribution is not pinned by the
/// standard, so it is not used anywhere).
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed);
    double normal();
    double uniform();  // in (0, 1]

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace bo2d
