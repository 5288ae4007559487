#include "model/equation.hpp"

#include <cmath>

namespace bo2d {

double dispersion(const EquationSpec& spec, double xi, double eta) {
    const double s = sign0(xi);
    if (spec.model == Model::Shrira) return s * (xi * xi + eta * eta);
    const double e2 = spec.transverse_sign == TransverseSign::Minus ? -eta * eta : eta * eta;
    return s * (1.0 + xi * xi + e2);
}

double resonance(const EquationSpec& spec, double xi1, double eta1, double xi2, double eta2) {
    return dispersion(spec, xi1 + xi2, eta1 + eta2) - dispersion(spec, xi1, eta1) -
           dispersion(spec, xi2, eta2);
}

double obstruction_phase(const EquationSpec& spec, double eta) {
    if (spec.model == Model::Shrira) return eta * eta;
    return spec.transverse_sign == TransverseSign::Minus ? 1.0 - eta * eta : 1.0 + eta * eta;
}

MultiplierSymbol propagator(const EquationSpec& spec, const GridPtr& grid, double t) {
    if (!std::isfinite(t)) fail(ErrorCode::InvalidArgument, "propagator: t must be finite");
    MultiplierSymbol sym(grid);
    const auto& g = *grid;
    // The unpaired x-Nyquist column is its own conjugate partner; w is odd in
    // xi, so it gets w = 0 there (same convention as zeroing odd symbols).
    const int nyq = g.nx() / 2;
    for (int ix = 0; ix < g.nx(); ++ix) {
        for (int iy = 0; iy < g.ny(); ++iy) {
            const double w = ix == nyq ? 0.0 : dispersion(spec, g.kx(ix), g.ky(iy));
            sym.values[g.index(ix, iy)] = std::polar(1.0, t * w);
        }
    }
    sym.unitary = true;
    sym.real_preserving = true;
    return sym;
}

}  // namespace bo2d
