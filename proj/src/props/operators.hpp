#pragma once

#include <optional>

#include "model/equation.hpp"
#include "props/family.hpp"
#include "props/line.hpp"

namespace bo2d {

/// ||D^a [H, g] D^b f||_p / (||g'||_inf ||f||_p), the empirical constant of
/// the nonlocal commutator estimate. Orders: either a + b = 1 with b > 0 and
/// 0 <= a,b <= 1 (fractional case) or nonnegative integers l + m >= 1
/// (classical case, derivative symbols (i xi)^l, denominator ||d^{l+m}g||_inf).
double commutator_ratio(const RealFn& g, const RealFn& f, double alpha, double beta, double p,
                        const LineGrid& grid);

/// H(x f) - x H(f); equals the constant -(1/pi) int f for this convention,
/// in particular 0 whenever int f = 0.
RealFn commutator_x(const RealFn& f, const LineGrid& grid);

/// max over the family of ||w_n^{theta/2} H f||_2 / ||w_n^{theta/2} f||_2,
/// a lower bound on the weighted operator norm. theta in (-1, 1).
double weighted_hilbert_norm(double theta, int trunc_n, const TestFamily& family,
                             const LineGrid& grid, int threads = 1);

/// Stein derivative D^b f(x) = (int |f(x)-f(y)|^2 / |x-y|^{1+2b} dy)^{1/2},
/// quadrature over the window with the singular cell |y-x| < dx/2 replaced by
/// its local-Lipschitz closed form and the exterior integral evaluated in
/// closed form with f extended by its boundary values. b in (0,1).
using ComplexFn = std::vector<std::complex<double>>;
double stein_derivative_at(const ComplexFn& f, double b, const LineGrid& grid, int i);
RealFn stein_derivative(const ComplexFn& f, double b, const LineGrid& grid);
RealFn stein_derivative(const RealFn& f, double b, const LineGrid& grid);

struct BilinearParams {
    int N1 = 1, N2 = 1, N3 = 1;  // dyadic spatial shells
    int L1 = 1, L2 = 1, L3 = 1;  // dyadic modulation widths (tau cells of width 1)
    EquationSpec spec;           // torus symbol, Lx = Ly = 2*pi convention
};

struct BilinearTrial {
    double integral = 0.0;
    double bound = 0.0;  // N_min * L_min^{1/2} * prod ||f_j||_2
    double ratio = 0.0;
};

/// One brute-force trial of the convolution estimate: draws nonnegative
/// f_j supported in the discretized D_{N_j,L_j}, computes
/// int (f1 * f2) f3 exactly for cell-wise constant tau profiles, and the
/// ratio to the claimed bound.
BilinearTrial bilinear_trial(const BilinearParams& params, const TestFamily& family, int trial);

/// Lattice points (m,n) with |(m,n)| in [N/2, N) for N >= 2; {(0,0)} for N = 1.
std::vector<std::pair<int, int>> dyadic_shell(int N);

}  // namespace bo2d
