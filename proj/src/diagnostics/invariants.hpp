#pragma once

#include "core/field.hpp"
#include "model/equation.hpp"

namespace bo2d {

/// M = sum u^2 * (Lx*Ly/(nx*ny)), the discrete integral of u^2.
double mass(const RealField& u);

/// Conserved energy of the flow. BO2D:
///   E = 1/2 (||D_x^{1/2}u||^2 + ||D_x^{-1/2}u||^2 -/+ ||D_x^{-1/2} dy u||^2) - 1/6 int u^3,
/// the -/+ matching the sign of the eta^2 term in the dispersion relation;
/// Shrira: E = 1/2 (||D_x^{1/2}u||^2 + ||D_x^{-1/2} dy u||^2) - 1/6 int u^3.
/// Spectral sums via Parseval, cubic term in physical space. Requires
/// uhat(0,n) = 0 for all n (X^s membership); NegativePowerOnNonzeroMean else.
double energy(const RealField& u, const EquationSpec& spec);
double energy(const RealField& u, const SpectralField& uhat, const EquationSpec& spec);

struct SobolevNorms {
    double hs;        // ||J^s u||
    double xs;        // ||J_x^s u|| + ||D_x^{-1/2} u|| + ||D_x^{-1/2} dy u||
    double xs_tilde;  // ||J_x^s u|| + ||D_x^{-1/2} dy u||
};

/// Discrete L2 norms of the energy-space family. The D_x^{-1/2} pieces
/// require zero x-mean, same error as energy.
SobolevNorms norms(const RealField& u, double s);
SobolevNorms norms(const SpectralField& uhat, double s);

/// ||J^s u|| alone (defined for any data).
double hs_norm(const SpectralField& uhat, double s);

/// Largest |uhat(0,n)| over n (the x-mean content per transverse mode).
double zero_row_magnitude(const SpectralField& uhat);

}  // namespace bo2d
