#include "diagnostics/invariants.hpp"

#include <cmath>

namespace bo2d {

double mass(const RealField& u) {
    double s = 0.0;
    for (double v : u.values) s += v * v;
    return s * u.grid->cell_area();
}

double zero_row_magnitude(const SpectralField& uhat) {
    const auto& g = *uhat.grid;
    double worst = 0.0;
    for (int iy = 0; iy < g.ny(); ++iy)
        worst = std::max(worst, std::abs(uhat.coeffs[g.index(0, iy)]));
    return worst;
}

namespace {

void require_zero_x_mean(const SpectralField& uhat, const char* who) {
    const double worst = zero_row_magnitude(uhat);
    const double ref = max_abs(uhat);
    if (worst > 1e-12 * std::max(ref, 1e-300))
        fail(ErrorCode::NegativePowerOnNonzeroMean,
             std::string(who) + ": data has nonzero x-mean content (outside X^s)");
}

}  // namespace

double energy(const RealField& u, const SpectralField& uhat, const EquationSpec& spec) {
    require_zero_x_mean(uhat, "energy");
    const auto& g = *uhat.grid;
    double s_half = 0.0, s_neg = 0.0, s_negy = 0.0;
    for (int ix = 0; ix < g.nx(); ++ix) {
        const double akx = std::abs(g.kx(ix));
        if (akx == 0.0) continue;
        for (int iy = 0; iy < g.ny(); ++iy) {
            const double p = std::norm(uhat.coeffs[g.index(ix, iy)]);
            s_half += akx * p;
            s_neg += p / akx;
            s_negy += g.ky(iy) * g.ky(iy) / akx * p;
        }
    }
    const double plancherel = 1.0 / (g.Lx() * g.Ly());
    s_half *= plancherel;
    s_neg *= plancherel;
    s_negy *= plancherel;

    double cubic = 0.0;
    for (double v : u.values) cubic += v * v * v;
    cubic *= u.grid->cell_area();

    double quad;
    if (spec.model == Model::Shrira) {
        quad = s_half + s_negy;
    } else {
        quad = spec.transverse_sign == TransverseSign::Minus ? s_half + s_neg - s_negy
                                                             : s_half + s_neg + s_negy;
    }
    return 0.5 * quad - cubic / 6.0;
}

double energy(const RealField& u, const EquationSpec& spec) {
    return energy(u, forward_transform(u), spec);
}

SobolevNorms norms(const SpectralField& uhat, double s) {
    const auto& g = *uhat.grid;
    const bool zero_mean =
        zero_row_magnitude(uhat) <= 1e-12 * std::max(max_abs(uhat), 1e-300);

    double hs2 = 0.0, jxs2 = 0.0, neg2 = 0.0, negy2 = 0.0;
    for (int ix = 0; ix < g.nx(); ++ix) {
        const double kx2 = g.kx(ix) * g.kx(ix);
        const double akx = std::abs(g.kx(ix));
        for (int iy = 0; iy < g.ny(); ++iy) {
            const double p = std::norm(uhat.coeffs[g.index(ix, iy)]);
            const double ky2 = g.ky(iy) * g.ky(iy);
            hs2 += std::pow(1.0 + kx2 + ky2, s) * p;
            jxs2 += std::pow(1.0 + kx2, s) * p;
            if (akx > 0.0) {
                neg2 += p / akx;
                negy2 += ky2 / akx * p;
            }
        }
    }
    const double plancherel = 1.0 / (g.Lx() * g.Ly());
    SobolevNorms out;
    out.hs = std::sqrt(hs2 * plancherel);
    const double jxs = std::sqrt(jxs2 * plancherel);
    if (!zero_mean) {
        fail(ErrorCode::NegativePowerOnNonzeroMean,
             "norms: X^s norms need zero x-mean data");
    }
    out.xs = jxs + std::sqrt(neg2 * plancherel) + std::sqrt(negy2 * plancherel);
    out.xs_tilde = jxs + std::sqrt(negy2 * plancherel);
    return out;
}

SobolevNorms norms(const RealField& u, double s) { return norms(forward_transform(u), s); }

double hs_norm(const SpectralField& uhat, double s) {
    const auto& g = *uhat.grid;
    double hs2 = 0.0;
    for (int ix = 0; ix < g.nx(); ++ix) {
        const double kx2 = g.kx(ix) * g.kx(ix);
        for (int iy = 0; iy < g.ny(); ++iy) {
            const double ky2 = g.ky(iy) * g.ky(iy);
            hs2 += std::pow(1.0 + kx2 + ky2, s) * std::norm(uhat.coeffs[g.index(ix, iy)]);
        }
    }
    return std::sqrt(hs2 / (g.Lx() * g.Ly()));
}

}  // namespace bo2d
