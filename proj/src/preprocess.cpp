#include "xcreg/preprocess.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "xcreg/errors.hpp"

namespace xcreg {

Curve estimate_derivative(const Curve& curve, double bandwidth, const Grid& out_grid) {
  if (!(bandwidth > 0.0)) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::NumericError,
                "bandwidth must be positive");
  }
  if (out_grid.front() < curve.domain_lo() - 1e-12 ||
      out_grid.back() > curve.domain_hi() + 1e-12) {
    throw_error(ErrorKind::OutOfDomain, ErrorCode::NumericError,
                "output grid exceeds the curve domain");
  }
  const auto& g = curve.grid();
  const auto& y = curve.values();
  constexpr double kWeightFloor = 1e-8;

  std::vector<double> out(out_grid.size());
  for (std::size_t o = 0; o < out_grid.size(); ++o) {
    const double x0 = out_grid[o];
    // Weighted normal equations for the centered quadratic fit.
    Eigen::Matrix3d xtx = Eigen::Matrix3d::Zero();
    Eigen::Vector3d xty = Eigen::Vector3d::Zero();
    int supported = 0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double u = (g[k] - x0) / bandwidth;
      const double w = std::exp(-0.5 * u * u);
      if (w <= kWeightFloor) continue;
      ++supported;
      const double d = g[k] - x0;
      const double d2 = d * d;
      Eigen::Vector3d row(1.0, d, d2);
      xtx += w * row * row.transpose();
      xty += w * y[k] * row;
    }
    if (supported < 3) {
      throw_error(ErrorKind::DegenerateWindow, ErrorCode::NumericError,
                  "fewer than 3 kernel-supported points at t=" + std::to_string(x0));
    }
    const Eigen::Vector3d beta = xtx.ldlt().solve(xty);
    out[o] = beta[1];
  }
  return Curve(out_grid, std::move(out), curve.interp());
}

double default_bandwidth(const Grid& grid) { return 10.0 * grid.median_spacing(); }

Curve normalize_auc(const Curve& curve, const std::optional<SubintervalSpec>& window,
                    const QuadratureSpec& quad) {
  const SubintervalSpec w = window ? *window : SubintervalSpec::full(curve.grid());
  const WindowQuadrature wq(curve.grid(), w, quad);
  const double area = wq.integrate_curve(curve);
  if (std::abs(area) < 1e-12) {
    throw_error(ErrorKind::ZeroArea, ErrorCode::NumericError,
                "curve area over the window is numerically zero");
  }
  std::vector<double> scaled(curve.values());
  for (auto& v : scaled) v /= area;
  return curve.with_values(std::move(scaled));
}

Curve extend_constant_right(const Curve& curve, double new_tmax) {
  const auto& g = curve.grid();
  if (!(new_tmax > g.back())) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::NumericError,
                "extend_constant_right needs new_tmax beyond the current domain");
  }
  const double step = g.median_spacing();
  std::vector<double> pts(g.points().begin(), g.points().end());
  std::vector<double> vals(curve.values());
  double t = g.back() + step;
  while (t < new_tmax - 1e-9 * step) {
    pts.push_back(t);
    vals.push_back(vals.back());
    t += step;
  }
  pts.push_back(new_tmax);
  vals.push_back(vals.back());
  return Curve(Grid(std::move(pts)), std::move(vals), curve.interp(), curve.extension());
}

}  // namespace xcreg
