#include "diagnostics/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bo2d {

Complex moment_transform(const RealField& u, double eta) {
    const auto& g = *u.grid;
    const double j_real = eta * g.Ly() / (2.0 * std::numbers::pi);
    const double j_round = std::round(j_real);
    if (std::abs(j_real - j_round) > 1e-9 * std::max(1.0, std::abs(j_real)))
        fail(ErrorCode::OffLatticeFrequency,
             "moment_transform: eta is not a lattice frequency 2*pi*j/Ly");

    // Row sums first, then one complex phase per y sample.
    Complex acc(0.0, 0.0);
    for (int iy = 0; iy < g.ny(); ++iy) {
        double row = 0.0;
        for (int ix = 0; ix < g.nx(); ++ix) row += g.x(ix) * u.values[g.index(ix, iy)];
        acc += row * std::polar(1.0, -eta * g.y(iy));
    }
    return acc * g.cell_area();
}

Complex obstruction_functional(const DiagnosticSeries& series, double eta, double t1,
                               double t2) {
    const auto& g = *series.grid;
    const double j_real = eta * g.Ly() / (2.0 * std::numbers::pi);
    const double j_round = std::round(j_real);
    if (std::abs(j_real - j_round) > 1e-9 * std::max(1.0, std::abs(j_real)))
        fail(ErrorCode::OffLatticeFrequency,
             "obstruction_functional: eta is not a lattice frequency");
    const int j = static_cast<int>(j_round);

    auto it = std::find(series.spec.moment_etas.begin(), series.spec.moment_etas.end(), j);
    if (it == series.spec.moment_etas.end())
        fail(ErrorCode::OffLatticeFrequency,
             "obstruction_functional: eta index " + std::to_string(j) +
                 " was not recorded in this series");
    const std::size_t eta_idx = it - series.spec.moment_etas.begin();

    const std::size_t i1 = series.index_of_time(t1);
    const std::size_t i2 = series.index_of_time(t2);
    if (!(i1 < i2))
        fail(ErrorCode::TimesNotOnGrid, "obstruction_functional: need t1 < t2 on the grid");

    const double theta = obstruction_phase(series.equation, eta);
    const int row_idx = g.index_of_mode_n(j);

    // d_xi uhat(0, eta, t1) = -i * moment.
    const Complex dxi_uhat = Complex(0.0, -1.0) * series.records[i1].moments[eta_idx];

    Complex integral(0.0, 0.0);
    for (std::size_t k = i1; k + 1 <= i2; ++k) {
        const auto& a = series.records[k];
        const auto& b = series.records[k + 1];
        const Complex fa = std::sin(theta * (t2 - a.t)) * a.u2hat_row0[row_idx];
        const Complex fb = std::sin(theta * (t2 - b.t)) * b.u2hat_row0[row_idx];
        integral += 0.5 * (b.t - a.t) * (fa + fb);
    }

    const Complex two_i(0.0, 2.0);
    return two_i * std::sin(theta * (t2 - t1)) * dxi_uhat + integral;
}

double duhamel_residual(const DiagnosticSeries& series, std::pair<int, int> mode) {
    auto it = std::find(series.spec.probes.begin(), series.spec.probes.end(), mode);
    if (it == series.spec.probes.end())
        fail(ErrorCode::InvalidArgument, "duhamel_residual: mode was not recorded as a probe");
    const std::size_t p = it - series.spec.probes.begin();

    if (series.records.size() < 2) return 0.0;
    if (!series.uniform_times())
        fail(ErrorCode::NonUniformSeries, "duhamel_residual: record times are not uniform");

    const auto& g = *series.grid;
    const int ix = g.index_of_mode_m(mode.first);
    const double kx = ix == g.nx() / 2 ? 0.0 : g.kx(ix);
    const double ky = g.ky(g.index_of_mode_n(mode.second));
    // Same Nyquist convention as the propagator (w = 0 on the unpaired column).
    const double w = ix == g.nx() / 2 ? 0.0 : dispersion(series.equation, kx, ky);

    const double t0 = series.records[0].t;
    const Complex uhat0 = series.records[0].uhat_probes[p];

    double max_u2 = 0.0;
    for (const auto& rec : series.records) max_u2 = std::max(max_u2, std::abs(rec.u2hat_probes[p]));
    const double denom = std::abs(uhat0) + max_u2;
    if (denom == 0.0) return 0.0;

    // Running trapezoid of J(t) = int_{t0}^{t} e^{-i w (t'-t0)} u2hat(t') dt';
    // then int_{t0}^{t} e^{i w (t-t')} u2hat dt' = e^{i w (t-t0)} J(t).
    Complex J(0.0, 0.0);
    double worst = 0.0;
    for (std::size_t k = 1; k < series.records.size(); ++k) {
        const auto& a = series.records[k - 1];
        const auto& b = series.records[k];
        const Complex ga = std::polar(1.0, -w * (a.t - t0)) * a.u2hat_probes[p];
        const Complex gb = std::polar(1.0, -w * (b.t - t0)) * b.u2hat_probes[p];
        J += 0.5 * (b.t - a.t) * (ga + gb);
        const Complex phase = std::polar(1.0, w * (b.t - t0));
        const Complex residual =
            b.uhat_probes[p] - phase * uhat0 + Complex(0.0, 0.5 * kx) * (phase * J);
        worst = std::max(worst, std::abs(residual));
    }
    return worst / denom;
}

}  // namespace bo2d
