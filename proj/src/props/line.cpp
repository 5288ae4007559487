#include "props/line.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/fft.hpp"
#include "core/multipliers.hpp"

namespace bo2d {

LineGrid::LineGrid(int n_, double W_, int pad_) : n(n_), W(W_), pad_factor(pad_) {
    if (n < 256 || (n & (n - 1)) != 0)
        fail(ErrorCode::InvalidArgument, "LineGrid: n must be a power of two >= 256");
    if (!(W > 0.0)) fail(ErrorCode::InvalidArgument, "LineGrid: W must be positive");
    if (pad_factor < 2) fail(ErrorCode::InvalidArgument, "LineGrid: pad_factor must be >= 2");
}

double LineGrid::xi(int k) const {
    const int P = padded_n();
    const int m = k < P / 2 ? k : k - P;
    return std::numbers::pi * m / (W * pad_factor);
}

double edge_fraction(const RealFn& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    if (m == 0.0) return 0.0;
    const std::size_t n = f.size();
    double edge = std::max(std::max(std::abs(f[0]), std::abs(f[1])),
                           std::max(std::abs(f[n - 1]), std::abs(f[n - 2])));
    return edge / m;
}

void require_edge_decay(const RealFn& f, const char* who) {
    const double frac = edge_fraction(f);
    if (frac > 1e-8)
        fail(ErrorCode::EdgeMassError,
             std::string(who) + ": function does not decay at the window edges (edge/max = " +
                 std::to_string(frac) + ")");
}

RealFn apply_line_symbol(const RealFn& f, const LineGrid& grid,
                         const std::vector<Complex>& symbol) {
    const int n = grid.n;
    const int P = grid.padded_n();
    const int off = (P - n) / 2;
    std::vector<Complex> buf(P, Complex(0.0, 0.0));
    for (int i = 0; i < n; ++i) buf[off + i] = Complex(f[i], 0.0);

    std::vector<Complex> hat(P);
    auto& fft = fft1d_for(P);
    fft.forward(buf.data(), hat.data());
    for (int k = 0; k < P; ++k) hat[k] *= symbol[k];
    fft.backward(hat.data(), buf.data());

    RealFn out(n);
    const double inv = 1.0 / P;
    for (int i = 0; i < n; ++i) out[i] = buf[off + i].real() * inv;
    return out;
}

std::vector<Complex> hilbert_line_symbol(const LineGrid& grid) {
    const int P = grid.padded_n();
    std::vector<Complex> sym(P);
    for (int k = 0; k < P; ++k)
        sym[k] = k == P / 2 ? Complex(0.0, 0.0) : Complex(0.0, -sign0(grid.xi(k)));
    return sym;
}

std::vector<Complex> frac_deriv_line_symbol(const LineGrid& grid, double alpha) {
    const int P = grid.padded_n();
    std::vector<Complex> sym(P);
    for (int k = 0; k < P; ++k) {
        const double a = std::abs(grid.xi(k));
        sym[k] = Complex(a == 0.0 ? 0.0 : std::pow(a, alpha), 0.0);
    }
    return sym;
}

std::vector<Complex> deriv_line_symbol(const LineGrid& grid, int m) {
    const int P = grid.padded_n();
    std::vector<Complex> sym(P);
    for (int k = 0; k < P; ++k)
        sym[k] = k == P / 2 ? Complex(0.0, 0.0) : std::pow(Complex(0.0, grid.xi(k)), m);
    return sym;
}

RealFn hilbert_line(const RealFn& f, const LineGrid& grid) {
    require_edge_decay(f, "hilbert_line");
    return apply_line_symbol(f, grid, hilbert_line_symbol(grid));
}

RealFn frac_deriv_line(const RealFn& f, const LineGrid& grid, double alpha) {
    if (alpha == 0.0) return f;
    return apply_line_symbol(f, grid, frac_deriv_line_symbol(grid, alpha));
}

RealFn deriv_line(const RealFn& f, const LineGrid& grid, int m) {
    if (m == 0) return f;
    return apply_line_symbol(f, grid, deriv_line_symbol(grid, m));
}

double lp_norm_line(const RealFn& f, const LineGrid& grid, double p) {
    double s = 0.0;
    for (double v : f) s += std::pow(std::abs(v), p);
    return std::pow(s * grid.dx(), 1.0 / p);
}

double max_abs_line(const RealFn& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace bo2d
