#pragma once

#include "core/field.hpp"

namespace bo2d {

/// A complex Fourier symbol sampled on the wavenumber lattice. The flags
/// record structural properties: |value| = 1 everywhere (unitary) and
/// value(-m,-n) = conj(value(m,n)) (real-preserving, i.e. the operator maps
/// real fields to real fields).
struct MultiplierSymbol {
    GridPtr grid;
    std::vector<Complex> values;
    bool unitary = false;
    bool real_preserving = false;

    MultiplierSymbol() = default;
    explicit MultiplierSymbol(GridPtr g)
        : grid(std::move(g)), values(grid->size(), Complex(0.0, 0.0)) {}

    SpectralField apply(const SpectralField& F) const;

    /// Largest deviation from the claimed flags (for tests).
    double unitary_defect() const;
    double real_preserving_defect() const;
};

enum class Axis { X, Y };

inline double sign0(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

/// -i*sign(kx) with sign(0) = 0; the unpaired Nyquist column is zeroed so the
/// symbol stays conjugate-symmetric on the even lattice.
MultiplierSymbol hilbert_x_symbol(const GridPtr& grid);
SpectralField hilbert_x(const SpectralField& F);

/// |kx|^s. For s < 0 every kx = 0 coefficient must already vanish (relative
/// to max |coeff|) unless project_zero_mode is set, in which case the kx = 0
/// row is zeroed instead of raising NegativePowerOnNonzeroMean.
SpectralField frac_deriv_x(const SpectralField& F, double s, bool project_zero_mode = false);

/// i*k along the given axis, Nyquist mode zeroed.
MultiplierSymbol deriv_symbol(const GridPtr& grid, Axis axis);
SpectralField deriv(const SpectralField& F, Axis axis);

enum class BesselKind { X, Y, Full };

/// <kx>^s, <ky>^s or <|(kx,ky)|>^s with <t> = sqrt(1+t^2).
MultiplierSymbol bessel_symbol(const GridPtr& grid, double s, BesselKind kind);
SpectralField bessel_potential(const SpectralField& F, double s, BesselKind kind);

/// Smooth even dyadic bump: psi1 = 1 on [-1,1], supp in [-2,2], glued by the
/// standard e^{-1/t} partition in between.
double lp_bump_base(double xi);
/// psi_{<=N}(xi) = psi1(xi/N).
double lp_bump_cumulative(double xi, double N);
/// Shell bump psi_N = psi1(xi/N) - psi1(2 xi/N) for N >= 2; the N = 1 shell
/// is defined as the cumulative psi_{<=1} so the dyadic telescope is exact.
double lp_bump(double xi, double N);

enum class LpMode { Radial, XOnly };

/// Littlewood-Paley projector: multiplies coefficients by psi_N(|k|)
/// (radial) or psi_N(kx) (x-only); cumulative variant uses psi_{<=N}.
SpectralField lp_project(const SpectralField& F, double N, LpMode mode, bool cumulative);

/// Largest mode kept by the alias-safe quadratic truncation: 3*cutoff < n.
int dealias_cutoff(int n);

/// Zero all modes with |m| > cutoff_x or |n| > cutoff_y (2/3 rule, both axes).
void apply_dealias_mask(SpectralField& F);

}  // namespace bo2d
