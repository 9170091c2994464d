#include "xcreg/global_shift.hpp"

#include <cmath>
#include <string>

#include "xcreg/errors.hpp"

namespace xcreg {

std::vector<std::pair<std::size_t, std::size_t>> component_pairs(std::size_t p) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(p * (p - 1) / 2);
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t k = j + 1; k < p; ++k) pairs.emplace_back(j, k);
  }
  return pairs;
}

ContrastMatrix build_contrast_matrix(std::size_t p) {
  if (p < 2) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                "contrast matrix needs p >= 2");
  }
  const auto pairs = component_pairs(p);
  ContrastMatrix out;
  out.p = p;
  out.rows = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(pairs.size() + 1),
                                   static_cast<Eigen::Index>(p));
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    out.rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(pairs[r].first)) = 1.0;
    out.rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(pairs[r].second)) = -1.0;
  }
  out.rows.row(static_cast<Eigen::Index>(pairs.size())).setOnes();

  const auto rank = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(out.rows).rank();
  if (rank != static_cast<Eigen::Index>(p)) {
    throw_error(ErrorKind::NumericError, ErrorCode::InvariantViolation,
                "contrast matrix lost full column rank");
  }
  return out;
}

GlobalShiftResult solve_global_shifts(const std::vector<double>& tau_pairs, std::size_t p,
                                      std::vector<std::string> component_names) {
  const std::size_t n_pairs = p * (p - 1) / 2;
  if (tau_pairs.size() != n_pairs) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::RegistrationFailure,
                "expected " + std::to_string(n_pairs) + " pairwise shifts, got " +
                    std::to_string(tau_pairs.size()));
  }
  for (double t : tau_pairs) {
    if (!std::isfinite(t)) {
      throw_error(ErrorKind::NonFinite, ErrorCode::RegistrationFailure,
                  "pairwise shift vector contains a non-finite entry");
    }
  }
  const ContrastMatrix A = build_contrast_matrix(p);
  Eigen::VectorXd stacked = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_pairs + 1));
  for (std::size_t r = 0; r < n_pairs; ++r) stacked(static_cast<Eigen::Index>(r)) = tau_pairs[r];

  // Normal equations; A^T A is p x p and well conditioned for this design.
  const Eigen::MatrixXd ata = A.rows.transpose() * A.rows;
  const Eigen::VectorXd aty = A.rows.transpose() * stacked;
  const Eigen::VectorXd theta = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(ata).solve(aty);
  const Eigen::VectorXd residual = stacked - A.rows * theta;

  GlobalShiftResult out;
  out.theta_hat.assign(theta.data(), theta.data() + theta.size());
  out.tau_hat_stacked.assign(stacked.data(), stacked.data() + stacked.size());
  out.residuals.assign(residual.data(), residual.data() + residual.size());
  out.component_names = std::move(component_names);
  return out;
}

MultiCurveSample apply_shifts(const MultiCurveSample& sample,
                              const std::vector<double>& theta,
                              const SubintervalSpec& window) {
  const std::size_t p = sample.n_components();
  if (theta.size() != p) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::RegistrationFailure,
                "theta length must equal the component count");
  }
  const Grid& grid = sample.grid();
  const double t0 = grid.front();
  const double tmax = grid.back();
  double dom_lo = t0;
  double dom_hi = tmax;
  for (std::size_t j = 0; j < p; ++j) {
    // Evaluating X(t + theta_j) on [r1, r2] must stay inside the domain.
    if (window.r1 + theta[j] < t0 - 1e-9 || window.r2 + theta[j] > tmax + 1e-9) {
      const std::string name =
          sample.component_names().empty() ? std::to_string(j) : sample.component_names()[j];
      throw_error(ErrorKind::ShiftOutOfRange, ErrorCode::RegistrationFailure,
                  "shift for component " + name + " pushes the window outside the domain");
    }
    dom_lo = std::max(dom_lo, t0 - theta[j]);
    dom_hi = std::min(dom_hi, tmax - theta[j]);
  }

  // Original grid nodes inside the shared shifted domain.
  std::vector<double> pts;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] >= dom_lo - 1e-9 && grid[i] <= dom_hi + 1e-9) pts.push_back(grid[i]);
  }
  if (pts.size() < 2) {
    throw_error(ErrorKind::ShiftOutOfRange, ErrorCode::RegistrationFailure,
                "shifted domains share fewer than two grid nodes");
  }
  Grid out_grid{pts};

  std::vector<Curve> out;
  out.reserve(sample.curves().size());
  for (std::size_t i = 0; i < sample.n_subjects(); ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const Curve& c = sample.curve(i, j);
      std::vector<double> vals(out_grid.size());
      for (std::size_t t = 0; t < out_grid.size(); ++t) {
        vals[t] = c.evaluate(std::clamp(out_grid[t] + theta[j], t0, tmax));
      }
      out.emplace_back(out_grid, std::move(vals), c.interp());
    }
  }
  return MultiCurveSample(sample.n_subjects(), p, std::move(out), sample.component_names());
}

double cross_component_distance(const std::vector<Curve>& subject_curves,
                                const std::vector<double>& theta,
                                const SubintervalSpec& window,
                                const QuadratureSpec& quad) {
  const std::size_t p = subject_curves.size();
  if (theta.size() != p || p < 2) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::RegistrationFailure,
                "cross_component_distance needs one shift per curve, p >= 2");
  }
  for (std::size_t j = 0; j < p; ++j) {
    const Curve& c = subject_curves[j];
    if (window.r1 + theta[j] < c.domain_lo() - 1e-9 ||
        window.r2 + theta[j] > c.domain_hi() + 1e-9) {
      throw_error(ErrorKind::ShiftOutOfRange, ErrorCode::RegistrationFailure,
                  "shift for component " + std::to_string(j) +
                      " leaves the curve domain over the window");
    }
  }
  const WindowQuadrature wq(subject_curves.front().grid(), window, quad);
  const double lo = subject_curves.front().domain_lo();
  const double hi = subject_curves.front().domain_hi();

  // Shifted values per component at the shared nodes.
  std::vector<std::vector<double>> shifted(p, std::vector<double>(wq.nodes.size()));
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t t = 0; t < wq.nodes.size(); ++t) {
      shifted[j][t] = subject_curves[j].evaluate(std::clamp(wq.nodes[t] + theta[j], lo, hi));
    }
  }
  double total = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t k = j + 1; k < p; ++k) {
      double acc = 0.0;
      for (std::size_t t = 0; t < wq.nodes.size(); ++t) {
        const double d = shifted[j][t] - shifted[k][t];
        acc += wq.weights[t] * d * d;
      }
      total += acc;
    }
  }
  return total;
}

}  // namespace xcreg
