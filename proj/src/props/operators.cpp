#include "props/operators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "diagnostics/weights.hpp"
#include "props/report.hpp"

namespace bo2d {

namespace {

bool near_integer(double v) { return std::abs(v - std::round(v)) <= 1e-12; }

bool is_constant(const RealFn& g) {
    for (double v : g)
        if (v != g[0]) return false;
    return true;
}

}  // namespace

double commutator_ratio(const RealFn& g, const RealFn& f, double alpha, double beta, double p,
                        const LineGrid& grid) {
    const bool integers = near_integer(alpha) && near_integer(beta) && alpha >= 0 && beta >= 0;
    const bool classical = integers && alpha + beta >= 1.0 - 1e-12;
    const bool fractional = !classical && alpha >= 0.0 && beta > 0.0 && alpha <= 1.0 &&
                            beta <= 1.0 && std::abs(alpha + beta - 1.0) <= 1e-12;
    if (!classical && !fractional)
        fail(ErrorCode::InvalidOrders,
             "commutator_ratio: need alpha + beta = 1 with beta > 0, or integers l + m >= 1");
    if (!(p > 1.0) || !std::isfinite(p))
        fail(ErrorCode::InvalidOrders, "commutator_ratio: p must lie in (1, inf)");
    require_edge_decay(f, "commutator_ratio");
    require_edge_decay(g, "commutator_ratio");

    // [H, c] = 0 identically for constant c.
    if (is_constant(g)) return 0.0;

    auto outer = [&](const RealFn& h) {
        return classical ? deriv_line(h, grid, static_cast<int>(std::lround(alpha)))
                         : frac_deriv_line(h, grid, alpha);
    };
    auto inner = [&](const RealFn& h) {
        return classical ? deriv_line(h, grid, static_cast<int>(std::lround(beta)))
                         : frac_deriv_line(h, grid, beta);
    };

    const RealFn df = inner(f);
    RealFn gdf(grid.n), hdf = hilbert_line(df, grid);
    for (int i = 0; i < grid.n; ++i) gdf[i] = g[i] * df[i];
    const RealFn h_gdf = hilbert_line(gdf, grid);
    RealFn comm(grid.n);
    for (int i = 0; i < grid.n; ++i) comm[i] = h_gdf[i] - g[i] * hdf[i];
    const RealFn num = outer(comm);

    const int total_order = classical ? static_cast<int>(std::lround(alpha + beta)) : 1;
    const RealFn dg = deriv_line(g, grid, total_order);
    const double denom = max_abs_line(dg) * lp_norm_line(f, grid, p);
    const double numerator = lp_norm_line(num, grid, p);
    if (numerator == 0.0) return 0.0;
    return numerator / denom;
}

RealFn commutator_x(const RealFn& f, const LineGrid& grid) {
    require_edge_decay(f, "commutator_x");
    RealFn xf(grid.n);
    for (int i = 0; i < grid.n; ++i) xf[i] = grid.x(i) * f[i];
    const RealFn h_xf = hilbert_line(xf, grid);
    const RealFn hf = hilbert_line(f, grid);
    RealFn out(grid.n);
    for (int i = 0; i < grid.n; ++i) out[i] = h_xf[i] - grid.x(i) * hf[i];
    return out;
}

double weighted_hilbert_norm(double theta, int trunc_n, const TestFamily& family,
                             const LineGrid& grid, int threads) {
    if (!(theta > -1.0 && theta < 1.0))
        fail(ErrorCode::ThetaOutOfRange, "weighted_hilbert_norm: theta must be in (-1, 1)");
    if (trunc_n <= 0)
        fail(ErrorCode::InvalidArgument, "weighted_hilbert_norm: trunc_n must be positive");

    std::vector<double> w_half(grid.n);
    for (int i = 0; i < grid.n; ++i)
        w_half[i] = std::pow(truncated_weight(grid.x(i), trunc_n), 0.5 * theta);

    const std::vector<double> ratios =
        run_trials(family.count, threads, [&](int trial) {
            const RealFn f = family.draw(grid, trial);
            const RealFn hf = hilbert_line(f, grid);
            double num = 0.0, den = 0.0;
            for (int i = 0; i < grid.n; ++i) {
                num += w_half[i] * w_half[i] * hf[i] * hf[i];
                den += w_half[i] * w_half[i] * f[i] * f[i];
            }
            return den == 0.0 ? 0.0 : std::sqrt(num / den);
        });
    double worst = 0.0;
    for (double r : ratios) worst = std::max(worst, r);
    return worst;
}

double stein_derivative_at(const ComplexFn& f, double b, const LineGrid& grid, int i) {
    if (!(b > 0.0 && b < 1.0))
        fail(ErrorCode::BOutOfRange, "stein_derivative: b must be in (0, 1)");
    const int n = grid.n;
    const double dx = grid.dx();
    const double xi = grid.x(i);

    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double d = std::abs(xi - grid.x(j));
        acc += std::norm(f[i] - f[j]) / std::pow(d, 1.0 + 2.0 * b) * dx;
    }

    // Singular cell |y - x| < dx/2: integrand ~ |f'(x)|^2 |y-x|^{1-2b}, whose
    // integral over the cell is closed-form.
    const int il = std::max(i - 1, 0);
    const int ir = std::min(i + 1, n - 1);
    const double fp = std::abs(f[ir] - f[il]) / ((ir - il) * dx);
    acc += fp * fp * std::pow(0.5 * dx, 2.0 - 2.0 * b) / (1.0 - b);

    // Exterior of the window, f extended by its boundary values:
    // int_{d}^{inf} |jump|^2 r^{-1-2b} dr = |jump|^2 d^{-2b} / (2b).
    const double dl = xi - (-grid.W - 0.5 * dx);
    const double dr = (grid.W - 0.5 * dx) - xi;
    if (dl > 0.0) acc += std::norm(f[i] - f[0]) * std::pow(dl, -2.0 * b) / (2.0 * b);
    if (dr > 0.0) acc += std::norm(f[i] - f[n - 1]) * std::pow(dr, -2.0 * b) / (2.0 * b);

    return std::sqrt(acc);
}

RealFn stein_derivative(const ComplexFn& f, double b, const LineGrid& grid) {
    RealFn out(grid.n);
    for (int i = 0; i < grid.n; ++i) out[i] = stein_derivative_at(f, b, grid, i);
    return out;
}

RealFn stein_derivative(const RealFn& f, double b, const LineGrid& grid) {
    ComplexFn cf(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) cf[i] = Complex(f[i], 0.0);
    return stein_derivative(cf, b, grid);
}

std::vector<std::pair<int, int>> dyadic_shell(int N) {
    if (N == 1) return {{0, 0}};
    std::vector<std::pair<int, int>> shell;
    const double lo = 0.5 * N, hi = N;
    for (int m = -N; m <= N; ++m) {
        for (int n = -N; n <= N; ++n) {
            const double r = std::hypot(static_cast<double>(m), static_cast<double>(n));
            if (r >= lo && r < hi) shell.emplace_back(m, n);
        }
    }
    return shell;
}

BilinearTrial bilinear_trial(const BilinearParams& params, const TestFamily& family,
                             int trial) {
    auto check_dyadic = [](int v, const char* what) {
        if (v < 1 || (v & (v - 1)) != 0)
            fail(ErrorCode::InvalidArgument,
                 std::string("bilinear_trial: ") + what + " must be a dyadic number >= 1");
    };
    check_dyadic(params.N1, "N1");
    check_dyadic(params.N2, "N2");
    check_dyadic(params.N3, "N3");
    check_dyadic(params.L1, "L1");
    check_dyadic(params.L2, "L2");
    check_dyadic(params.L3, "L3");
    if (params.N1 > 64 || params.N2 > 64 || params.N3 > 64)
        fail(ErrorCode::LatticeTooLarge, "bilinear_trial: shells beyond |m|,|n| <= 64");
    if (params.L1 > 32 || params.L2 > 32 || params.L3 > 32)
        fail(ErrorCode::LatticeTooLarge, "bilinear_trial: more than 64 tau cells per mode");

    const auto shell1 = dyadic_shell(params.N1);
    const auto shell2 = dyadic_shell(params.N2);
    const auto shell3 = dyadic_shell(params.N3);
    const double work = static_cast<double>(shell1.size()) * shell2.size() *
                        (2.0 * params.L1) * (2.0 * params.L2);
    if (work > 2e9) fail(ErrorCode::LatticeTooLarge, "bilinear_trial: dense convolution too large");

    // f_j[(mode index)*(2L) + (c + L)] for cells [w + c, w + c + 1), c in [-L, L).
    auto draw = [&](const std::vector<std::pair<int, int>>& shell, int L, std::uint64_t salt) {
        GaussianRng rng(mix_seed(family.seed, static_cast<std::uint64_t>(trial), salt));
        std::vector<double> v(shell.size() * 2 * L);
        for (auto& x : v) x = std::abs(rng.normal());
        return v;
    };
    const auto f1 = draw(shell1, params.L1, 101);
    const auto f2 = draw(shell2, params.L2, 202);
    const auto f3 = draw(shell3, params.L3, 303);

    std::map<std::pair<int, int>, int> index3;
    for (std::size_t i = 0; i < shell3.size(); ++i) index3[shell3[i]] = static_cast<int>(i);

    auto omega = [&](const std::pair<int, int>& k) {
        const double w = dispersion(params.spec, k.first, k.second);
        return static_cast<long long>(std::llround(w));
    };

    double integral = 0.0;
    for (std::size_t i1 = 0; i1 < shell1.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < shell2.size(); ++i2) {
            const std::pair<int, int> k3{shell1[i1].first + shell2[i2].first,
                                         shell1[i1].second + shell2[i2].second};
            const auto it = index3.find(k3);
            if (it == index3.end()) continue;
            const int i3 = it->second;
            // tau1 + tau2 - w3 = -Omega + (c1 + c2 .. c1 + c2 + 2): the product
            // of two unit cells overlaps the two target cells with weight 1/2.
            const long long Om = omega(k3) - omega(shell1[i1]) - omega(shell2[i2]);
            for (int c1 = -params.L1; c1 < params.L1; ++c1) {
                const double* row1 = &f1[i1 * 2 * params.L1];
                const double a1 = row1[c1 + params.L1];
                for (int c2 = -params.L2; c2 < params.L2; ++c2) {
                    const double a2 = f2[i2 * 2 * params.L2 + c2 + params.L2];
                    const long long base = c1 + c2 - Om;
                    double f3sum = 0.0;
                    for (int d = 0; d <= 1; ++d) {
                        const long long c3 = base + d;
                        if (c3 >= -params.L3 && c3 < params.L3)
                            f3sum += 0.5 * f3[i3 * 2 * params.L3 + static_cast<int>(c3) +
                                              params.L3];
                    }
                    integral += a1 * a2 * f3sum;
                }
            }
        }
    }

    auto l2 = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    };
    const double nmin = std::min({params.N1, params.N2, params.N3});
    const double lmin = std::min({params.L1, params.L2, params.L3});
    BilinearTrial out;
    out.integral = integral;
    out.bound = nmin * std::sqrt(lmin) * l2(f1) * l2(f2) * l2(f3);
    out.ratio = out.bound == 0.0 ? 0.0 : integral / out.bound;
    return out;
}

}  // namespace bo2d
