#pragma once

#include <cstdint>

#include "core/multipliers.hpp"
#include "model/equation.hpp"

namespace bo2d {

enum class Dealias { TwoThirds, None };

struct StepperConfig {
    double dt = 1e-3;
    Dealias dealias = Dealias::TwoThirds;
    int record_every = 1;
    int checkpoint_every = 0;  // steps; 0 = off
    bool nonlinearity = true;
};

/// One evolving solution: model, spectral state and step bookkeeping.
/// time == step_count * dt whenever driven by run() with a fixed dt.
struct SimState {
    EquationSpec spec;
    GridPtr grid;
    double time = 0.0;
    SpectralField field;
    std::uint64_t step_count = 0;
};

/// Spectral coefficients of -1/2 d/dx (u^2): inverse transform, square
/// pointwise, forward transform, multiply by -i*kx/2 (kx = 0 row exactly
/// zero, Nyquist column zeroed). With the two-thirds rule, modes beyond the
/// alias-safe cutoff are removed before and after the product.
SpectralField nonlinear_term(const SpectralField& F, Dealias dealias);

/// Classical RK4 on the integrating-factor variable v = e^{-iwt} uhat: the
/// linear flow is advanced by exact propagator multiplication, so with the
/// nonlinearity disabled one step is exactly one propagator application.
class IfRk4Stepper {
public:
    IfRk4Stepper(const EquationSpec& spec, const GridPtr& grid, const StepperConfig& cfg);

    /// Advance by dt. Throws NonFiniteState if coefficients stop being finite.
    void step(SimState& state) const;

    const StepperConfig& config() const { return cfg_; }
    /// max|u| of the physical field seen by the most recent nonlinear stage.
    double last_max_u() const { return last_max_u_; }
    double max_kx() const { return max_kx_; }

private:
    SpectralField nonlinear(const SpectralField& F) const;

    StepperConfig cfg_;
    MultiplierSymbol e_half_;  // e^{i w dt/2}, cached for the whole run
    MultiplierSymbol e_full_;  // e^{i w dt}
    mutable double last_max_u_ = 0.0;
    double max_kx_ = 0.0;
};

/// Single-step convenience wrapper around IfRk4Stepper.
SimState step_ifrk4(const SimState& state, const StepperConfig& cfg);

}  // namespace bo2d
