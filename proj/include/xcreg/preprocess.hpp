#pragma once

#include <optional>

#include "xcreg/curve.hpp"
#include "xcreg/quadrature.hpp"
#include "xcreg/window.hpp"

namespace xcreg {

/// First derivative by local quadratic fitting under a Gaussian kernel.
///
/// At each output point a degree-2 polynomial is fit by weighted least
/// squares to the sampled values, with weights exp(-0.5 ((t_k - x)/h)^2);
/// the linear coefficient is the derivative estimate. Exact for global
/// polynomials of degree <= 2. Fails with DegenerateWindow when fewer
/// than 3 grid points carry weight above 1e-8 at some output point.
Curve estimate_derivative(const Curve& curve, double bandwidth, const Grid& out_grid);

/// Conservative default: 10x the median grid spacing.
double default_bandwidth(const Grid& grid);

/// Rescale so the area under the curve over the window (full domain when
/// absent) equals 1. ZeroArea when |area| < 1e-12.
Curve normalize_auc(const Curve& curve,
                    const std::optional<SubintervalSpec>& window = std::nullopt,
                    const QuadratureSpec& quad = {});

/// Resample onto a longer grid holding the last value constant beyond the
/// original domain. new_tmax must exceed the current domain end.
Curve extend_constant_right(const Curve& curve, double new_tmax);

}  // namespace xcreg
