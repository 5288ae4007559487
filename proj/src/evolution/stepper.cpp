#include "evolution/stepper.hpp"

#include <cmath>

#include "core/fft.hpp"

namespace bo2d {

namespace {

SpectralField nonlinear_term_impl(const SpectralField& F, Dealias dealias, double* max_u_out) {
    const auto& g = *F.grid;
    SpectralField in = F;
    if (dealias == Dealias::TwoThirds) apply_dealias_mask(in);

    std::vector<Complex> tmp(g.size());
    fft2d_for(g.nx(), g.ny()).backward(in.coeffs.data(), tmp.data());
    const double inv_area = 1.0 / (g.Lx() * g.Ly());
    // Square in physical space; imaginary parts are roundoff for Hermitian input.
    double max_u = 0.0;
    for (auto& v : tmp) {
        const double u = v.real() * inv_area;
        max_u = std::max(max_u, std::abs(u));
        v = Complex(u * u, 0.0);
    }
    if (max_u_out) *max_u_out = max_u;
    SpectralField out(F.grid, /*real_tag=*/true);
    fft2d_for(g.nx(), g.ny()).forward(tmp.data(), out.coeffs.data());
    const double scale = g.cell_area();
    for (auto& c : out.coeffs) c *= scale;
    if (dealias == Dealias::TwoThirds) apply_dealias_mask(out);

    const int nyq = g.nx() / 2;
    for (int ix = 0; ix < g.nx(); ++ix) {
        const double kx = ix == nyq ? 0.0 : g.kx(ix);
        const Complex mult(0.0, -0.5 * kx);
        for (int iy = 0; iy < g.ny(); ++iy) out.coeffs[g.index(ix, iy)] *= mult;
    }
    return out;
}

}  // namespace

SpectralField nonlinear_term(const SpectralField& F, Dealias dealias) {
    return nonlinear_term_impl(F, dealias, nullptr);
}

IfRk4Stepper::IfRk4Stepper(const EquationSpec& spec, const GridPtr& grid,
                           const StepperConfig& cfg)
    : cfg_(cfg),
      e_half_(propagator(spec, grid, 0.5 * cfg.dt)),
      e_full_(propagator(spec, grid, cfg.dt)) {
    if (!(cfg.dt > 0.0)) fail(ErrorCode::RangeError, "stepper: dt must be positive");
    for (double k : grid->kx_all()) max_kx_ = std::max(max_kx_, std::abs(k));
}

SpectralField IfRk4Stepper::nonlinear(const SpectralField& F) const {
    // Same as nonlinear_term, additionally tracking max|u| for the advective
    // stability guard.
    return nonlinear_term_impl(F, cfg_.dealias, &last_max_u_);
}

void IfRk4Stepper::step(SimState& state) const {
    const auto& g = *state.grid;
    const double dt = cfg_.dt;
    const std::size_t n = g.size();
    const SpectralField& a = state.field;

    SpectralField next(state.grid, a.represents_real);
    if (!cfg_.nonlinearity) {
        for (std::size_t i = 0; i < n; ++i) next.coeffs[i] = e_full_.values[i] * a.coeffs[i];
    } else {
        const SpectralField k1 = nonlinear(a);
        SpectralField u1(state.grid, true);
        for (std::size_t i = 0; i < n; ++i)
            u1.coeffs[i] = e_half_.values[i] * (a.coeffs[i] + 0.5 * dt * k1.coeffs[i]);
        const SpectralField k2 = nonlinear_term(u1, cfg_.dealias);
        SpectralField u2(state.grid, true);
        for (std::size_t i = 0; i < n; ++i)
            u2.coeffs[i] = e_half_.values[i] * a.coeffs[i] + 0.5 * dt * k2.coeffs[i];
        const SpectralField k3 = nonlinear_term(u2, cfg_.dealias);
        SpectralField u3(state.grid, true);
        for (std::size_t i = 0; i < n; ++i)
            u3.coeffs[i] = e_full_.values[i] * a.coeffs[i] +
                           dt * (e_half_.values[i] * k3.coeffs[i]);
        const SpectralField k4 = nonlinear_term(u3, cfg_.dealias);
        const double w = dt / 6.0;
        for (std::size_t i = 0; i < n; ++i) {
            next.coeffs[i] = e_full_.values[i] * a.coeffs[i] +
                             w * (e_full_.values[i] * k1.coeffs[i] +
                                  2.0 * (e_half_.values[i] * (k2.coeffs[i] + k3.coeffs[i])) +
                                  k4.coeffs[i]);
        }
    }

    if (!all_finite(next))
        fail(ErrorCode::NonFiniteState,
             "step_ifrk4: non-finite coefficients (blow-up or dt too large) at step " +
                 std::to_string(state.step_count + 1));

    state.field = std::move(next);
    // Run-driven states keep time == step_count*dt exactly (recomputed as one
    // product so interrupted and uninterrupted runs agree bitwise); states
    // with a foreign time anchor just accumulate.
    const bool aligned = state.time == static_cast<double>(state.step_count) * dt;
    state.step_count += 1;
    state.time = aligned ? static_cast<double>(state.step_count) * dt : state.time + dt;
}

SimState step_ifrk4(const SimState& state, const StepperConfig& cfg) {
    IfRk4Stepper stepper(state.spec, state.grid, cfg);
    SimState out = state;
    stepper.step(out);
    return out;
}

}  // namespace bo2d
