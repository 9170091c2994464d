#pragma once

#include <functional>
#include <vector>

#include "xcreg/curve.hpp"
#include "xcreg/window.hpp"

namespace xcreg {

enum class QuadratureRule { Trapezoid, Simpson };

struct QuadratureSpec {
  QuadratureRule rule = QuadratureRule::Trapezoid;
  // Subdivision of each grid interval when integrating over a window.
  int nodes_per_interval = 4;
};

/// Composite quadrature of f on [a, b] with `resolution` equal panels.
/// Simpson silently rounds the panel count up to even.
double integrate(const std::function<double(double)>& f, double a, double b,
                 QuadratureRule rule, int resolution);

/// Fixed node/weight set for integrals over a window. Nodes refine the
/// grid intervals intersecting [r1, r2], so repeated integrals against
/// shifted curves stay continuous in the shift.
struct WindowQuadrature {
  std::vector<double> nodes;
  std::vector<double> weights;

  WindowQuadrature() = default;
  WindowQuadrature(const Grid& grid, const SubintervalSpec& window,
                   const QuadratureSpec& spec);

  double integrate_values(const std::vector<double>& values_at_nodes) const;
  double integrate_curve(const Curve& c) const;
};

/// Trapezoid weights on the grid nodes themselves (used by FPCA inner
/// products and whole-curve integrals).
std::vector<double> trapezoid_weights(const Grid& grid);

}  // namespace xcreg
