#include "core/field.hpp"

#include <algorithm>
#include <cmath>

#include "core/fft.hpp"

namespace bo2d {

SpectralField forward_transform(const RealField& f) {
    const auto& g = *f.grid;
    SpectralField out(f.grid, /*real_tag=*/true);
    std::vector<Complex> tmp(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) tmp[i] = Complex(f.values[i], 0.0);
    fft2d_for(g.nx(), g.ny()).forward(tmp.data(), out.coeffs.data());
    const double scale = g.cell_area();
    for (auto& c : out.coeffs) c *= scale;
    return out;
}

RealField inverse_transform(const SpectralField& F, double tol) {
    const auto& g = *F.grid;
    const double defect = hermitian_defect(F);
    const double ref = max_abs(F);
    if (defect > tol * std::max(ref, 1e-300))
        fail(ErrorCode::NonHermitianInput,
             "inverse_transform: coefficients violate Hermitian symmetry (defect " +
                 std::to_string(defect) + " vs max " + std::to_string(ref) + ")");

    std::vector<Complex> tmp(g.size());
    fft2d_for(g.nx(), g.ny()).backward(F.coeffs.data(), tmp.data());
    RealField out(F.grid);
    const double scale = 1.0 / (g.Lx() * g.Ly());
    for (std::size_t i = 0; i < g.size(); ++i) out.values[i] = tmp[i].real() * scale;
    return out;
}

double hermitian_defect(const SpectralField& F) {
    const auto& g = *F.grid;
    double worst = 0.0;
    for (int ix = 0; ix < g.nx(); ++ix) {
        const int jx = ix == 0 ? 0 : g.nx() - ix;
        for (int iy = 0; iy < g.ny(); ++iy) {
            const int jy = iy == 0 ? 0 : g.ny() - iy;
            const Complex a = F.coeffs[g.index(ix, iy)];
            const Complex b = std::conj(F.coeffs[g.index(jx, jy)]);
            worst = std::max(worst, std::abs(a - b));
        }
    }
    return worst;
}

double max_abs(const SpectralField& F) {
    double m = 0.0;
    for (const auto& c : F.coeffs) m = std::max(m, std::abs(c));
    return m;
}

double max_abs(const RealField& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double l2_norm(const RealField& f) {
    double s = 0.0;
    for (double v : f.values) s += v * v;
    return std::sqrt(s * f.grid->cell_area());
}

double l2_norm(const SpectralField& F) {
    double s = 0.0;
    for (const auto& c : F.coeffs) s += std::norm(c);
    return std::sqrt(s / (F.grid->Lx() * F.grid->Ly()));
}

bool all_finite(const SpectralField& F) {
    for (const auto& c : F.coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

}  // namespace bo2d
