#pragma once

#include "core/multipliers.hpp"

namespace bo2d {

enum class Model { BO2D, Shrira };
enum class TransverseSign { Minus, Plus };

/// Which evolution model and, for BO2D, the sign of the eta^2 term in the
/// dispersion relation. Shrira's symbol is fixed and ignores the sign.
struct EquationSpec {
    Model model = Model::BO2D;
    TransverseSign transverse_sign = TransverseSign::Minus;
};

/// BO2D: sign(xi)*(1 + xi^2 -/+ eta^2); Shrira: sign(xi)*(xi^2 + eta^2).
/// sign(0) = 0, so the xi = 0 plane is stationary under the linear flow.
double dispersion(const EquationSpec& spec, double xi, double eta);

/// Omega = w(k1+k2) - w(k1) - w(k2).
double resonance(const EquationSpec& spec, double xi1, double eta1, double xi2, double eta2);

/// One-sided limit of the dispersion symbol at xi -> 0+, the phase entering
/// the decay-obstruction functionals: 1 -/+ eta^2 (BO2D) or eta^2 (Shrira).
double obstruction_phase(const EquationSpec& spec, double eta);

/// Exact linear propagator e^{i t w(kx,ky)} sampled on the lattice;
/// unitary and real-preserving (w is odd in kx).
MultiplierSymbol propagator(const EquationSpec& spec, const GridPtr& grid, double t);

}  // namespace bo2d
