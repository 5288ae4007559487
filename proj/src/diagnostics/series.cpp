#include "diagnostics/series.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "core/multipliers.hpp"
#include "diagnostics/invariants.hpp"
#include "diagnostics/weights.hpp"
#include "diagnostics/functionals.hpp"

namespace bo2d {

bool DiagnosticSeries::uniform_times(double rel_tol) const {
    if (records.size() < 3) return true;
    const double dt0 = records[1].t - records[0].t;
    for (std::size_t i = 2; i < records.size(); ++i) {
        const double dt = records[i].t - records[i - 1].t;
        if (std::abs(dt - dt0) > rel_tol * std::max(std::abs(dt0), 1e-300)) return false;
    }
    return true;
}

std::size_t DiagnosticSeries::index_of_time(double t) const {
    const double span = records.empty() ? 1.0 : std::max(1.0, std::abs(records.back().t));
    for (std::size_t i = 0; i < records.size(); ++i)
        if (std::abs(records[i].t - t) <= 1e-9 * span) return i;
    fail(ErrorCode::TimesNotOnGrid, "time " + std::to_string(t) + " is not a record time");
}

DiagnosticRecord make_record(double t, const SpectralField& uhat, const EquationSpec& eq,
                             const SeriesSpec& spec) {
    const auto& g = *uhat.grid;
    DiagnosticRecord rec;
    rec.t = t;

    const RealField u = inverse_transform(uhat);
    rec.mass = mass(u);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    try {
        rec.energy = energy(u, uhat, eq);
    } catch (const Error&) {
        rec.energy = nan;
    }
    try {
        const SobolevNorms n = norms(uhat, spec.norm_s);
        rec.hs = n.hs;
        rec.xs = n.xs;
    } catch (const Error&) {
        rec.hs = hs_norm(uhat, spec.norm_s);
        rec.xs = nan;
    }
    const auto [wx, wy] = weighted_norm(u, spec.weight_r1, spec.weight_r2);
    rec.wx = wx;
    rec.wy = wy;

    const double two_pi = 2.0 * std::numbers::pi;
    rec.moments.reserve(spec.moment_etas.size());
    for (int j : spec.moment_etas)
        rec.moments.push_back(moment_transform(u, two_pi * j / g.Ly()));

    // (u^2)-hat: probes plus the full kx = 0 row, needed by the Duhamel and
    // obstruction functionals.
    RealField usq(uhat.grid);
    for (std::size_t i = 0; i < u.values.size(); ++i) usq.values[i] = u.values[i] * u.values[i];
    const SpectralField u2hat = forward_transform(usq);

    rec.uhat_probes.reserve(spec.probes.size());
    rec.u2hat_probes.reserve(spec.probes.size());
    for (const auto& [m, n] : spec.probes) {
        rec.uhat_probes.push_back(uhat.mode(m, n));
        rec.u2hat_probes.push_back(u2hat.mode(m, n));
    }
    rec.u2hat_row0.resize(g.ny());
    for (int iy = 0; iy < g.ny(); ++iy) rec.u2hat_row0[iy] = u2hat.coeffs[g.index(0, iy)];
    return rec;
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string series_csv_header(const DiagnosticSeries& series) {
    std::ostringstream h;
    h << "t,mass,energy,hs,xs,wx,wy";
    for (int j : series.spec.moment_etas)
        h << ",moment_re(eta=" << j << "),moment_im(eta=" << j << ")";
    for (int j : series.spec.moment_etas)
        h << ",u2hat0_re(" << j << "),u2hat0_im(" << j << ")";
    for (const auto& [m, n] : series.spec.probes) {
        h << ",uhat_re(" << m << "," << n << "),uhat_im(" << m << "," << n << ")";
        h << ",u2hat_re(" << m << "," << n << "),u2hat_im(" << m << "," << n << ")";
    }
    return h.str();
}

void write_series_csv(const DiagnosticSeries& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
    out << series_csv_header(series) << "\n";
    const auto& g = *series.grid;
    for (const auto& rec : series.records) {
        out << fmt17(rec.t) << ',' << fmt17(rec.mass) << ',' << fmt17(rec.energy) << ','
            << fmt17(rec.hs) << ',' << fmt17(rec.xs) << ',' << fmt17(rec.wx) << ','
            << fmt17(rec.wy);
        for (std::size_t i = 0; i < series.spec.moment_etas.size(); ++i)
            out << ',' << fmt17(rec.moments[i].real()) << ',' << fmt17(rec.moments[i].imag());
        for (int j : series.spec.moment_etas) {
            const Complex v = rec.u2hat_row0[g.index_of_mode_n(j)];
            out << ',' << fmt17(v.real()) << ',' << fmt17(v.imag());
        }
        for (std::size_t p = 0; p < series.spec.probes.size(); ++p) {
            out << ',' << fmt17(rec.uhat_probes[p].real()) << ','
                << fmt17(rec.uhat_probes[p].imag()) << ',' << fmt17(rec.u2hat_probes[p].real())
                << ',' << fmt17(rec.u2hat_probes[p].imag());
        }
        out << "\n";
    }
    if (!out) fail(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace bo2d
