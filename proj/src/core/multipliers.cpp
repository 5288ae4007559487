#include "core/multipliers.hpp"

#include <cmath>

namespace bo2d {

SpectralField MultiplierSymbol::apply(const SpectralField& F) const {
    if (!F.grid->same_geometry(*grid))
        fail(ErrorCode::InvalidArgument, "multiplier/field grid mismatch");
    SpectralField out(F.grid, F.represents_real && real_preserving);
    for (std::size_t i = 0; i < values.size(); ++i) out.coeffs[i] = values[i] * F.coeffs[i];
    return out;
}

double MultiplierSymbol::unitary_defect() const {
    double worst = 0.0;
    for (const auto& v : values) worst = std::max(worst, std::abs(std::abs(v) - 1.0));
    return worst;
}

double MultiplierSymbol::real_preserving_defect() const {
    const auto& g = *grid;
    double worst = 0.0;
    for (int ix = 0; ix < g.nx(); ++ix) {
        const int jx = ix == 0 ? 0 : g.nx() - ix;
        for (int iy = 0; iy < g.ny(); ++iy) {
            const int jy = iy == 0 ? 0 : g.ny() - iy;
            worst = std::max(worst, std::abs(values[g.index(ix, iy)] -
                                             std::conj(values[g.index(jx, jy)])));
        }
    }
    return worst;
}

MultiplierSymbol hilbert_x_symbol(const GridPtr& grid) {
    MultiplierSymbol sym(grid);
    const auto& g = *grid;
    const int nyq = g.nx() / 2;
    for (int ix = 0; ix < g.nx(); ++ix) {
        const double s = ix == nyq ? 0.0 : sign0(g.kx(ix));
        const Complex v(0.0, -s);
        for (int iy = 0; iy < g.ny(); ++iy) sym.values[g.index(ix, iy)] = v;
    }
    sym.real_preserving = true;
    return sym;
}

SpectralField hilbert_x(const SpectralField& F) {
    return hilbert_x_symbol(F.grid).apply(F);
}

SpectralField frac_deriv_x(const SpectralField& F, double s, bool project_zero_mode) {
    const auto& g = *F.grid;
    SpectralField out(F.grid, F.represents_real);
    if (s == 0.0) {
        out.coeffs = F.coeffs;
        return out;
    }
    if (s < 0.0 && !project_zero_mode) {
        const double ref = max_abs(F);
        double worst = 0.0;
        for (int iy = 0; iy < g.ny(); ++iy)
            worst = std::max(worst, std::abs(F.coeffs[g.index(0, iy)]));
        if (worst > 1e-12 * std::max(ref, 1e-300))
            fail(ErrorCode::NegativePowerOnNonzeroMean,
                 "frac_deriv_x: negative power on data with nonzero kx = 0 content");
    }
    for (int ix = 0; ix < g.nx(); ++ix) {
        const double akx = std::abs(g.kx(ix));
        const double mult = akx == 0.0 ? 0.0 : std::pow(akx, s);
        for (int iy = 0; iy < g.ny(); ++iy)
            out.coeffs[g.index(ix, iy)] = mult * F.coeffs[g.index(ix, iy)];
    }
    return out;
}

MultiplierSymbol deriv_symbol(const GridPtr& grid, Axis axis) {
    MultiplierSymbol sym(grid);
    const auto& g = *grid;
    for (int ix = 0; ix < g.nx(); ++ix) {
        for (int iy = 0; iy < g.ny(); ++iy) {
            double k;
            if (axis == Axis::X)
                k = ix == g.nx() / 2 ? 0.0 : g.kx(ix);
            else
                k = iy == g.ny() / 2 ? 0.0 : g.ky(iy);
            sym.values[g.index(ix, iy)] = Complex(0.0, k);
        }
    }
    sym.real_preserving = true;
    return sym;
}

SpectralField deriv(const SpectralField& F, Axis axis) {
    return deriv_symbol(F.grid, axis).apply(F);
}

MultiplierSymbol bessel_symbol(const GridPtr& grid, double s, BesselKind kind) {
    MultiplierSymbol sym(grid);
    const auto& g = *grid;
    for (int ix = 0; ix < g.nx(); ++ix) {
        for (int iy = 0; iy < g.ny(); ++iy) {
            double t2;
            switch (kind) {
                case BesselKind::X: t2 = g.kx(ix) * g.kx(ix); break;
                case BesselKind::Y: t2 = g.ky(iy) * g.ky(iy); break;
                default: t2 = g.kx(ix) * g.kx(ix) + g.ky(iy) * g.ky(iy); break;
            }
            sym.values[g.index(ix, iy)] = std::pow(1.0 + t2, 0.5 * s);
        }
    }
    sym.real_preserving = true;
    if (s == 0.0) sym.unitary = true;
    return sym;
}

SpectralField bessel_potential(const SpectralField& F, double s, BesselKind kind) {
    return bessel_symbol(F.grid, s, kind).apply(F);
}

namespace {
// q(t) = e^{-1/t} for t > 0, 0 otherwise.
double q(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
}  // namespace

double lp_bump_base(double xi) {
    const double a = std::abs(xi);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    const double up = q(2.0 - a);
    return up / (up + q(a - 1.0));
}

double lp_bump_cumulative(double xi, double N) { return lp_bump_base(xi / N); }

double lp_bump(double xi, double N) {
    if (N < 2.0) return lp_bump_cumulative(xi, 1.0);
    return lp_bump_base(xi / N) - lp_bump_base(2.0 * xi / N);
}

SpectralField lp_project(const SpectralField& F, double N, LpMode mode, bool cumulative) {
    if (!(N >= 1.0) || std::log2(N) != std::floor(std::log2(N)))
        fail(ErrorCode::InvalidArgument, "lp_project: N must be a power of two >= 1");
    const auto& g = *F.grid;
    SpectralField out(F.grid, F.represents_real);
    for (int ix = 0; ix < g.nx(); ++ix) {
        for (int iy = 0; iy < g.ny(); ++iy) {
            const double arg = mode == LpMode::Radial
                                   ? std::hypot(g.kx(ix), g.ky(iy))
                                   : g.kx(ix);
            const double w = cumulative ? lp_bump_cumulative(arg, N) : lp_bump(arg, N);
            out.coeffs[g.index(ix, iy)] = w * F.coeffs[g.index(ix, iy)];
        }
    }
    return out;
}

int dealias_cutoff(int n) { return (n - 1) / 3; }

void apply_dealias_mask(SpectralField& F) {
    const auto& g = *F.grid;
    const int cx = dealias_cutoff(g.nx());
    const int cy = dealias_cutoff(g.ny());
    for (int ix = 0; ix < g.nx(); ++ix) {
        const bool kill_x = std::abs(g.mode_m(ix)) > cx;
        for (int iy = 0; iy < g.ny(); ++iy) {
            if (kill_x || std::abs(g.mode_n(iy)) > cy)
                F.coeffs[g.index(ix, iy)] = Complex(0.0, 0.0);
        }
    }
}

}  // namespace bo2d
