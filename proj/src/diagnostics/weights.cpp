#include "diagnostics/weights.hpp"

#include <cmath>

namespace bo2d {

namespace {

struct Quintic {
    double a0, a1, a3, a4, a5;  // a2 = 0
    double eval(double t) const {
        return a0 + t * (a1 + t * t * (a3 + t * (a4 + t * a5)));
    }
    double deriv(double t) const {
        return a1 + t * t * (3.0 * a3 + t * (4.0 * a4 + t * 5.0 * a5));
    }
};

// Bridge polynomial in t = (|x| - n)/(2n), t in [0,1].
Quintic bridge_poly(int n) {
    const double yn = std::sqrt(1.0 + static_cast<double>(n) * n);  // <n>
    const double y0 = yn;
    const double v0 = 2.0 * n * (n / yn);  // slope n/<n> scaled to t-units
    const double y1 = 2.0 * n;
    const double A = y1 - y0 - v0;
    const double B = -v0;
    Quintic p;
    p.a0 = y0;
    p.a1 = v0;
    p.a3 = 10.0 * A - 4.0 * B;
    p.a4 = -15.0 * A + 7.0 * B;
    p.a5 = 6.0 * A - 3.0 * B;
    return p;
}

}  // namespace

double truncated_weight(double x, int n) {
    if (n <= 0) fail(ErrorCode::InvalidArgument, "truncated_weight: n must be positive");
    const double a = std::abs(x);
    if (a <= n) return std::sqrt(1.0 + a * a);
    if (a >= 3.0 * n) return 2.0 * n;
    return bridge_poly(n).eval((a - n) / (2.0 * n));
}

double truncated_weight_derivative(double x, int n) {
    if (n <= 0) fail(ErrorCode::InvalidArgument, "truncated_weight: n must be positive");
    const double a = std::abs(x);
    const double s = x >= 0.0 ? 1.0 : -1.0;
    if (a <= n) return s * a / std::sqrt(1.0 + a * a);
    if (a >= 3.0 * n) return 0.0;
    return s * bridge_poly(n).deriv((a - n) / (2.0 * n)) / (2.0 * n);
}

std::pair<double, double> weighted_norm(const RealField& u, double r1, double r2,
                                        std::optional<int> truncation_n) {
    if (r1 < 0.0 || r2 < 0.0)
        fail(ErrorCode::InvalidArgument, "weighted_norm: orders must be nonnegative");
    const auto& g = *u.grid;
    double sx = 0.0, sy = 0.0;
    for (int ix = 0; ix < g.nx(); ++ix) {
        const double wx = truncation_n ? truncated_weight(g.x(ix), *truncation_n)
                                       : std::sqrt(1.0 + g.x(ix) * g.x(ix));
        const double wx2r = std::pow(wx, 2.0 * r1);
        for (int iy = 0; iy < g.ny(); ++iy) {
            const double v2 = u.values[g.index(ix, iy)] * u.values[g.index(ix, iy)];
            sx += wx2r * v2;
        }
    }
    for (int iy = 0; iy < g.ny(); ++iy) {
        const double wy = truncation_n ? truncated_weight(g.y(iy), *truncation_n)
                                       : std::sqrt(1.0 + g.y(iy) * g.y(iy));
        const double wy2r = std::pow(wy, 2.0 * r2);
        for (int ix = 0; ix < g.nx(); ++ix) {
            const double v2 = u.values[g.index(ix, iy)] * u.values[g.index(ix, iy)];
            sy += wy2r * v2;
        }
    }
    const double area = g.cell_area();
    return {std::sqrt(sx * area), std::sqrt(sy * area)};
}

}  // namespace bo2d
