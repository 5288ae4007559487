#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/field.hpp"
#include "model/equation.hpp"

namespace bo2d {

/// What gets sampled at each record time.
struct SeriesSpec {
    std::vector<std::pair<int, int>> probes;  // signed (m, n) probe modes
    std::vector<int> moment_etas;             // lattice indices j, eta = 2*pi*j/Ly
    double norm_s = 1.0;                      // s for the hs/xs columns
    double weight_r1 = 1.0;
    double weight_r2 = 1.0;
};

struct DiagnosticRecord {
    double t = 0.0;
    double mass = 0.0;
    double energy = 0.0;  // NaN when the zero-x-mean precondition fails
    double hs = 0.0;
    double xs = 0.0;  // NaN when the zero-x-mean precondition fails
    double wx = 0.0;
    double wy = 0.0;
    std::vector<Complex> moments;       // per requested eta index
    std::vector<Complex> uhat_probes;   // per probe mode
    std::vector<Complex> u2hat_probes;  // (u^2)-hat per probe mode
    std::vector<Complex> u2hat_row0;    // full (u^2)-hat(0, n) row, FFT index order
};

/// Time-stamped invariant/moment records of one evolving solution.
struct DiagnosticSeries {
    SeriesSpec spec;
    GridPtr grid;
    EquationSpec equation;
    std::vector<DiagnosticRecord> records;

    bool uniform_times(double rel_tol = 1e-9) const;
    /// Index of the record at time t; TimesNotOnGrid if absent.
    std::size_t index_of_time(double t) const;
};

/// Compute a full record from a spectral state. `uhat` must be the state of a
/// real field. Columns whose precondition fails (energy, xs) come back NaN.
DiagnosticRecord make_record(double t, const SpectralField& uhat, const EquationSpec& eq,
                             const SeriesSpec& spec);

/// CSV serialization: header row naming the columns, floats with 17
/// significant digits. The u2hat0 columns cover the requested eta indices.
void write_series_csv(const DiagnosticSeries& series, const std::string& path);
std::string series_csv_header(const DiagnosticSeries& series);

}  // namespace bo2d
