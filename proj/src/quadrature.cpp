#include "xcreg/quadrature.hpp"

#include <cmath>
#include <string>

#include "xcreg/errors.hpp"

namespace xcreg {

double integrate(const std::function<double(double)>& f, double a, double b,
                 QuadratureRule rule, int resolution) {
  if (!(a < b)) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::NumericError,
                "integrate requires a < b");
  }
  if (resolution < 2) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::NumericError,
                "integrate requires resolution >= 2");
  }
  int panels = resolution;
  if (rule == QuadratureRule::Simpson && panels % 2 != 0) ++panels;
  const double h = (b - a) / panels;

  auto eval = [&](double t) {
    const double v = f(t);
    if (!std::isfinite(v)) {
      throw_error(ErrorKind::NonFinite, ErrorCode::NumericError,
                  "integrand not finite at t=" + std::to_string(t));
    }
    return v;
  };

  double sum = 0.0;
  if (rule == QuadratureRule::Trapezoid) {
    sum = 0.5 * (eval(a) + eval(b));
    for (int i = 1; i < panels; ++i) sum += eval(a + i * h);
    return sum * h;
  }
  sum = eval(a) + eval(b);
  for (int i = 1; i < panels; ++i) {
    sum += eval(a + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

WindowQuadrature::WindowQuadrature(const Grid& grid, const SubintervalSpec& window,
                                   const QuadratureSpec& spec) {
  const int sub = std::max(1, spec.nodes_per_interval);
  const int per = (spec.rule == QuadratureRule::Simpson && sub % 2 != 0) ? sub + 1 : sub;

  if (window.r1 < grid.front() - 1e-12 || window.r2 > grid.back() + 1e-12) {
    throw_error(ErrorKind::OutOfDomain, ErrorCode::NumericError,
                "integration window exceeds the grid domain");
  }

  // Breakpoints: window ends plus every interior grid node, each grid
  // interval content then subdivided into `per` equal panels.
  std::vector<double> breaks;
  breaks.push_back(window.r1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] > window.r1 + 1e-12 && grid[i] < window.r2 - 1e-12) breaks.push_back(grid[i]);
  }
  breaks.push_back(window.r2);

  for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
    const double lo = breaks[b];
    const double hi = breaks[b + 1];
    const double h = (hi - lo) / per;
    const std::size_t base = nodes.size();
    if (b == 0) {
      nodes.push_back(lo);
      weights.push_back(0.0);
    }
    for (int i = 1; i <= per; ++i) {
      nodes.push_back(lo + i * h);
      weights.push_back(0.0);
    }
    nodes.back() = hi;  // avoid drift on the panel seam
    const std::size_t first = (b == 0) ? base : base - 1;
    if (spec.rule == QuadratureRule::Trapezoid) {
      for (int i = 0; i < per; ++i) {
        weights[first + i] += 0.5 * h;
        weights[first + i + 1] += 0.5 * h;
      }
    } else {
      for (int i = 0; i + 1 < per; i += 2) {
        weights[first + i] += h / 3.0;
        weights[first + i + 1] += 4.0 * h / 3.0;
        weights[first + i + 2] += h / 3.0;
      }
    }
  }
}

double WindowQuadrature::integrate_values(const std::vector<double>& values_at_nodes) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * values_at_nodes[i];
  return sum;
}

double WindowQuadrature::integrate_curve(const Curve& c) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * c.evaluate(nodes[i]);
  return sum;
}

std::vector<double> trapezoid_weights(const Grid& grid) {
  std::vector<double> w(grid.size(), 0.0);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double h = grid[i + 1] - grid[i];
    w[i] += 0.5 * h;
    w[i + 1] += 0.5 * h;
  }
  return w;
}

}  // namespace xcreg
