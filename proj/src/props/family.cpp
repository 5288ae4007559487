#include "props/family.hpp"

#include <cmath>
#include <numbers>

#include "core/fft.hpp"

namespace bo2d {

namespace {
std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = seed;
    std::uint64_t h = splitmix64(x);
    x ^= a * 0x9e3779b97f4a7c15ull;
    h ^= splitmix64(x);
    x ^= b * 0xc2b2ae3d27d4eb4full;
    h ^= splitmix64(x);
    return h;
}

GaussianRng::GaussianRng(std::uint64_t seed) : engine_(seed) {}

double GaussianRng::uniform() {
    // 53-bit mantissa in (0, 1].
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1p-53;
}

double GaussianRng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

RealFn TestFamily::draw(const LineGrid& grid, int trial, std::uint64_t salt) const {
    GaussianRng rng(mix_seed(seed, static_cast<std::uint64_t>(trial), salt));

    const int n = grid.n;
    const double xi_nyq = std::numbers::pi / grid.dx();
    const double xi0 = std::max(band_limit * xi_nyq, 1e-12);

    // Hermitian random spectrum on the bare (unpadded) window.
    std::vector<Complex> hat(n, Complex(0.0, 0.0));
    for (int k = 1; k < n / 2; ++k) {
        const double xi = std::numbers::pi * k / grid.W;
        const double env = std::exp(-(xi / xi0) * (xi / xi0));
        const Complex c(rng.normal() * env, rng.normal() * env);
        hat[k] = c;
        hat[n - k] = std::conj(c);
    }

    std::vector<Complex> phys(n);
    fft1d_for(n).backward(hat.data(), phys.data());

    // Spatial Gaussian envelope: edge value exp(-6.5^2/2) ~ 6.6e-10 keeps the
    // decay precondition satisfied with margin.
    const double sigma = grid.W / 6.5;
    RealFn f(n);
    for (int i = 0; i < n; ++i) {
        const double x = grid.x(i);
        f[i] = phys[i].real() * std::exp(-0.5 * (x / sigma) * (x / sigma));
    }

    double norm2 = 0.0;
    for (double v : f) norm2 += v * v;
    norm2 = std::sqrt(norm2 * grid.dx());
    if (norm2 > 0.0)
        for (double& v : f) v /= norm2;
    return f;
}

}  // namespace bo2d
