#include "xcreg/curve.hpp"

#include <algorithm>
#include <cmath>

#include "xcreg/sample.hpp"

namespace xcreg {

std::size_t Grid::segment_index(double t) const {
  const auto& pts = *points_;
  // upper_bound gives the first point > t; step back to the left node.
  auto it = std::upper_bound(pts.begin(), pts.end(), t);
  if (it == pts.begin()) return 0;
  std::size_t idx = static_cast<std::size_t>(it - pts.begin()) - 1;
  return std::min(idx, pts.size() - 2);
}

namespace {

// Natural cubic spline second derivatives (Thomas algorithm).
std::vector<double> natural_spline_moments(const Grid& g, const std::vector<double>& y) {
  const std::size_t n = g.size();
  std::vector<double> m(n, 0.0);
  if (n < 3) return m;
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
  diag[0] = 1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = g[i] - g[i - 1];
    const double h1 = g[i + 1] - g[i];
    diag[i] = 2.0 * (h0 + h1);
    upper[i] = h1;
    rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
  }
  diag[n - 1] = 1.0;
  // Forward sweep; natural ends keep m[0] = m[n-1] = 0.
  for (std::size_t i = 2; i + 1 < n; ++i) {
    const double h0 = g[i] - g[i - 1];
    const double w = h0 / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
    if (i == 1) break;
  }
  return m;
}

}  // namespace

Curve::Curve(Grid grid, std::vector<double> values, InterpMethod interp,
             ExtensionPolicy ext)
    : grid_(std::move(grid)), values_(std::move(values)), interp_(interp), ext_(ext) {
  if (values_.size() != grid_.size()) {
    throw_error(ErrorKind::GridMismatch, ErrorCode::InvariantViolation,
                "Curve values length " + std::to_string(values_.size()) +
                    " does not match grid length " + std::to_string(grid_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw_error(ErrorKind::NonFinite, ErrorCode::InvariantViolation,
                  "Curve value at index " + std::to_string(i) + " is not finite");
    }
  }
  if (interp_ == InterpMethod::CubicNatural) {
    moments_ = natural_spline_moments(grid_, values_);
  }
}

double Curve::evaluate(double t) const {
  const double lo = grid_.front();
  const double hi = grid_.back();
  // Absorb boundary roundoff from shift arithmetic.
  const double slack = 1e-10 * (hi - lo);
  if (t > hi) {
    if (ext_ == ExtensionPolicy::ConstantRight) return values_.back();
    if (t <= hi + slack) return values_.back();
    throw_error(ErrorKind::OutOfDomain, ErrorCode::NumericError,
                "evaluate at t=" + std::to_string(t) + " beyond domain end " +
                    std::to_string(hi));
  }
  if (t < lo) {
    if (t >= lo - slack) return values_.front();
    throw_error(ErrorKind::OutOfDomain, ErrorCode::NumericError,
                "evaluate at t=" + std::to_string(t) + " before domain start " +
                    std::to_string(lo));
  }
  const std::size_t i = grid_.segment_index(t);
  const double x0 = grid_[i];
  const double x1 = grid_[i + 1];
  const double h = x1 - x0;
  if (interp_ == InterpMethod::Linear) {
    const double f = (t - x0) / h;
    return (1.0 - f) * values_[i] + f * values_[i + 1];
  }
  const double a = (x1 - t) / h;
  const double b = (t - x0) / h;
  return a * values_[i] + b * values_[i + 1] +
         ((a * a * a - a) * moments_[i] + (b * b * b - b) * moments_[i + 1]) *
             (h * h) / 6.0;
}

Curve sample_curve(const Grid& grid, const std::function<double(double)>& f,
                   InterpMethod interp) {
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f(grid[i]);
  return Curve(grid, std::move(vals), interp);
}

MultiCurveSample::MultiCurveSample(Grid grid, std::size_t n, std::size_t p,
                                   std::vector<std::vector<double>> values_row_major,
                                   std::vector<std::string> component_names,
                                   InterpMethod interp)
    : grid_(std::move(grid)), n_(n), p_(p), names_(std::move(component_names)) {
  if (values_row_major.size() != n * p) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                "MultiCurveSample expects n*p value rows");
  }
  curves_.reserve(n * p);
  for (auto& vals : values_row_major) curves_.emplace_back(grid_, std::move(vals), interp);
  check_invariants();
}

MultiCurveSample::MultiCurveSample(std::size_t n, std::size_t p,
                                   std::vector<Curve> curves,
                                   std::vector<std::string> component_names)
    : n_(n), p_(p), curves_(std::move(curves)), names_(std::move(component_names)) {
  if (curves_.size() != n * p || curves_.empty()) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                "MultiCurveSample expects n*p curves");
  }
  grid_ = curves_.front().grid();
  check_invariants();
}

void MultiCurveSample::check_invariants() const {
  if (p_ < 2) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                "MultiCurveSample needs p >= 2 components");
  }
  if (n_ < 1) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                "MultiCurveSample needs n >= 1 subjects");
  }
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (!curves_[i].grid().same_as(grid_)) {
      throw_error(ErrorKind::GridMismatch, ErrorCode::InvariantViolation,
                  "curve " + std::to_string(i) + " is not on the common grid");
    }
  }
  if (!names_.empty() && names_.size() != p_) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                "component_names length must equal p");
  }
}

std::vector<Curve> MultiCurveSample::subject_curves(std::size_t subject) const {
  std::vector<Curve> out;
  out.reserve(p_);
  for (std::size_t j = 0; j < p_; ++j) out.push_back(curve(subject, j));
  return out;
}

MultiCurveSample MultiCurveSample::map_curves(
    const std::function<Curve(const Curve&)>& fn) const {
  std::vector<Curve> out;
  out.reserve(curves_.size());
  for (const auto& c : curves_) out.push_back(fn(c));
  return MultiCurveSample(n_, p_, std::move(out), names_);
}

}  // namespace xcreg
