#pragma once

#include <optional>
#include <utility>

#include "core/field.hpp"

namespace bo2d {

/// Truncated weight w_n: <x> for |x| <= n, 2n for |x| >= 3n, bridged on
/// n < |x| < 3n by the quintic Hermite interpolant with value <n> and slope
/// n/<n> at |x| = n, value 2n and slope 0 at 3n, and zero curvature at both
/// ends. Smooth, non-decreasing in |x|, w' <= 1.
double truncated_weight(double x, int n);

/// Derivative d/dx w_n (for property tests of monotonicity and w' <= 1).
double truncated_weight_derivative(double x, int n);

/// (||w(x)^{r1} u||, ||w(y)^{r2} u||) with centered coordinates; w = <.>
/// untruncated, or w_n when truncation_n is given.
std::pair<double, double> weighted_norm(const RealField& u, double r1, double r2,
                                        std::optional<int> truncation_n = std::nullopt);

}  // namespace bo2d
