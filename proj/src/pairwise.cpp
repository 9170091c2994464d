#include "xcreg/pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "xcreg/errors.hpp"

namespace xcreg {

PairwiseCriterion::PairwiseCriterion(const MultiCurveSample& sample, std::size_t j,
                                     std::size_t k, const SubintervalSpec& window,
                                     const QuadratureSpec& quad)
    : window_(window), j_(j), k_(k), n_(sample.n_subjects()) {
  const std::size_t p = sample.n_components();
  if (j >= p || k >= p || j == k) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::RegistrationFailure,
                "pairwise criterion needs distinct component indices below p");
  }
  const Grid& grid = sample.grid();
  if (window.t0 < grid.front() - 1e-12 || window.tmax > grid.back() + 1e-12) {
    throw_error(ErrorKind::OutOfDomain, ErrorCode::RegistrationFailure,
                "window domain exceeds the sample grid");
  }
  if (!window_.shift_range_usable()) {
    throw_error(ErrorKind::RangeDegenerate, ErrorCode::RegistrationFailure,
                "admissible shift range is empty; widen the remainder intervals");
  }
  quad_ = WindowQuadrature(grid, window, quad);
  grid_spacing_ = grid.median_spacing();

  const std::size_t m = quad_.nodes.size();
  fast_path_ = sample.curve(0, 0).interp() == InterpMethod::Linear;

  if (fast_path_) {
    const std::size_t g = grid.size();
    data_grid_.assign(grid.points().begin(), grid.points().end());
    Eigen::MatrixXd a_nodes(n_, m);  // component j at quadrature nodes
    Eigen::MatrixXd b_data(n_, g);   // component k at its own grid nodes
    for (std::size_t i = 0; i < n_; ++i) {
      const Curve& cj = sample.curve(i, j_);
      for (std::size_t t = 0; t < m; ++t) a_nodes(i, t) = cj.evaluate(quad_.nodes[t]);
      const auto& bv = sample.curve(i, k_).values();
      for (std::size_t c = 0; c < g; ++c) b_data(i, c) = bv[c];
    }
    cross_ = a_nodes.transpose() * b_data;
    sum_a_sq_.resize(m);
    for (std::size_t t = 0; t < m; ++t) sum_a_sq_[t] = a_nodes.col(t).squaredNorm();
    sum_b_sq_.resize(g);
    sum_b_adj_.assign(g, 0.0);
    for (std::size_t c = 0; c < g; ++c) {
      sum_b_sq_[c] = b_data.col(c).squaredNorm();
      if (c + 1 < g) sum_b_adj_[c] = b_data.col(c).dot(b_data.col(c + 1));
    }
  } else {
    curves_j_.reserve(n_);
    curves_k_.reserve(n_);
    a_at_nodes_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      curves_j_.push_back(sample.curve(i, j_));
      curves_k_.push_back(sample.curve(i, k_));
      a_at_nodes_[i].resize(m);
      for (std::size_t t = 0; t < m; ++t) {
        a_at_nodes_[i][t] = curves_j_.back().evaluate(quad_.nodes[t]);
      }
    }
  }
}

double PairwiseCriterion::value(double tau) const {
  const double slack = 1e-9 * (window_.tmax - window_.t0);
  if (tau < shift_lo() - slack || tau > shift_hi() + slack) {
    throw_error(ErrorKind::ShiftOutOfRange, ErrorCode::RegistrationFailure,
                "shift " + std::to_string(tau) + " outside admissible range [" +
                    std::to_string(shift_lo()) + ", " + std::to_string(shift_hi()) + "]");
  }
  const double v = fast_path_ ? value_fast(tau) : value_generic(tau);
  // Exact cancellation can land a hair below zero.
  return v < 0.0 ? 0.0 : v;
}

double PairwiseCriterion::value_fast(double tau) const {
  const std::size_t g = data_grid_.size();
  const double lo = data_grid_.front();
  const double hi = data_grid_.back();
  double total = 0.0;
  for (std::size_t t = 0; t < quad_.nodes.size(); ++t) {
    double s = quad_.nodes[t] - tau;
    if (s < lo) s = lo;  // admissibility already checked; absorb roundoff
    if (s > hi) s = hi;
    auto it = std::upper_bound(data_grid_.begin(), data_grid_.end(), s);
    std::size_t c = it == data_grid_.begin()
                        ? 0
                        : std::min(static_cast<std::size_t>(it - data_grid_.begin()) - 1, g - 2);
    const double f = (s - data_grid_[c]) / (data_grid_[c + 1] - data_grid_[c]);
    const double w0 = 1.0 - f;
    const double w1 = f;
    const double cross = w0 * cross_(t, c) + w1 * cross_(t, c + 1);
    const double bb = w0 * w0 * sum_b_sq_[c] + 2.0 * w0 * w1 * sum_b_adj_[c] +
                      w1 * w1 * sum_b_sq_[c + 1];
    total += quad_.weights[t] * (sum_a_sq_[t] - 2.0 * cross + bb);
  }
  return total / static_cast<double>(n_);
}

double PairwiseCriterion::value_generic(double tau) const {
  double total = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t t = 0; t < quad_.nodes.size(); ++t) {
      const double d = a_at_nodes_[i][t] - curves_k_[i].evaluate(quad_.nodes[t] - tau);
      acc += quad_.weights[t] * d * d;
    }
    total += acc;
  }
  return total / static_cast<double>(n_);
}

namespace {

struct ScanPoint {
  double tau;
  double value;
};

// Golden-section search on [a, b]; assumes a bracketed minimum and shrinks
// the interval to `tol`.
double golden_section(const PairwiseCriterion& criterion, double a, double b, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = criterion.value(x1);
  double f2 = criterion.value(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = criterion.value(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = criterion.value(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

PairwiseShift estimate_pairwise_shift(const PairwiseCriterion& criterion,
                                      const MinimizerOpts& opts) {
  const double lo = criterion.shift_lo();
  const double hi = criterion.shift_hi();
  if (!(lo < hi)) {
    throw_error(ErrorKind::RangeDegenerate, ErrorCode::RegistrationFailure,
                "admissible shift range is degenerate");
  }
  const double step = opts.coarse_step > 0.0 ? opts.coarse_step : criterion.grid_spacing();

  // Zero-anchored coarse grid so the null shift is always a candidate and
  // symmetric ties resolve by |tau|.
  std::vector<double> taus;
  taus.push_back(lo);
  const auto k_lo = static_cast<long long>(std::ceil(lo / step - 1e-12));
  const auto k_hi = static_cast<long long>(std::floor(hi / step + 1e-12));
  for (long long k = k_lo; k <= k_hi; ++k) {
    const double t = static_cast<double>(k) * step;
    if (t > lo + 1e-12 && t < hi - 1e-12) taus.push_back(t);
  }
  taus.push_back(hi);
  std::sort(taus.begin(), taus.end());

  std::vector<ScanPoint> scan;
  scan.reserve(taus.size());
  for (double t : taus) {
    const double v = criterion.value(t);
    if (std::isfinite(v)) scan.push_back({t, v});
  }
  if (scan.empty()) {
    throw_error(ErrorKind::NoMinimum, ErrorCode::RegistrationFailure,
                "criterion is non-finite across the admissible range");
  }

  double best_value = std::numeric_limits<double>::infinity();
  for (const auto& pt : scan) best_value = std::min(best_value, pt.value);
  const double tie_eps = 1e-12 * std::max(1.0, std::abs(best_value));
  std::size_t best_idx = 0;
  for (std::size_t i = 0; i < scan.size(); ++i) {
    const bool tie = scan[i].value <= best_value + tie_eps;
    if (!tie) continue;
    const bool better = std::abs(scan[i].tau) < std::abs(scan[best_idx].tau) - 1e-15 ||
                        (std::abs(std::abs(scan[i].tau) - std::abs(scan[best_idx].tau)) <= 1e-15 &&
                         scan[i].tau < scan[best_idx].tau);
    if (scan[best_idx].value > best_value + tie_eps || better) best_idx = i;
  }

  // Competing coarse-scan local minima near the global best.
  std::vector<double> near_minima;
  for (std::size_t i = 0; i < scan.size(); ++i) {
    const bool left_ok = i == 0 || scan[i].value <= scan[i - 1].value;
    const bool right_ok = i + 1 == scan.size() || scan[i].value <= scan[i + 1].value;
    if (left_ok && right_ok && scan[i].value <= best_value + opts.multimodal_eps) {
      near_minima.push_back(scan[i].tau);
    }
  }

  const double bracket_lo = best_idx == 0 ? lo : scan[best_idx - 1].tau;
  const double bracket_hi = best_idx + 1 == scan.size() ? hi : scan[best_idx + 1].tau;
  double tau_hat = golden_section(criterion, bracket_lo, bracket_hi, opts.tol);
  tau_hat = std::clamp(tau_hat, lo, hi);

  PairwiseShift result;
  result.tau_hat = tau_hat;
  result.criterion_at_min = criterion.value(tau_hat);
  result.search_trace.reserve(scan.size());
  for (const auto& pt : scan) result.search_trace.emplace_back(pt.tau, pt.value);
  result.near_minima = std::move(near_minima);
  result.censored =
      std::min(tau_hat - lo, hi - tau_hat) <= std::max(2.0 * opts.tol, 1e-9 * (hi - lo));
  return result;
}

std::pair<PairwiseShift, PairwiseShift> antisymmetry_check(
    const PairwiseCriterion& c_jk, const PairwiseCriterion& c_kj,
    const MinimizerOpts& opts) {
  return {estimate_pairwise_shift(c_jk, opts), estimate_pairwise_shift(c_kj, opts)};
}

}  // namespace xcreg
