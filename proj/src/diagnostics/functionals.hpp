#pragma once

#include "diagnostics/series.hpp"

namespace bo2d {

/// Discrete int int x u(x,y) e^{-i eta y} dx dy with centered x. eta must be
/// lattice-representable (eta = 2*pi*j/Ly, integer j); OffLatticeFrequency
/// else. The x-derivative of uhat at the zero frequency is -i times this.
Complex moment_transform(const RealField& u, double eta);

/// Decay-obstruction functional between two record times:
///   D(eta) = 2i sin(theta(eta)(t2-t1)) d_xi uhat(0,eta,t1)
///            + int_{t1}^{t2} sin(theta(eta)(t2-t')) (u^2)-hat(0,eta,t') dt',
/// theta per model (1 -/+ eta^2 or eta^2), time integral by trapezoid on the
/// record grid. D = 0 is necessary for |x|^{3/2}-type decay at both times;
/// a nonzero D quantifies the obstruction.
Complex obstruction_functional(const DiagnosticSeries& series, double eta, double t1,
                               double t2);

/// Max over record times t of
///  |uhat(t) - e^{iw(t-t0)} uhat(t0) + (i kx/2) int_{t0}^t e^{iw(t-t')}(u^2)-hat dt'|
/// at the probe mode, trapezoid in time, normalized by |uhat(t0)| + max|u2hat|.
/// Requires uniformly spaced records (NonUniformSeries else).
double duhamel_residual(const DiagnosticSeries& series, std::pair<int, int> mode);

}  // namespace bo2d
