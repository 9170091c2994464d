#include "xcreg/simgen.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "xcreg/errors.hpp"
#include "xcreg/parallel.hpp"
#include "xcreg/rng.hpp"

namespace xcreg {

double latent_curve(double t) {
  const double d = t - 25.0;
  return 20.0 - 0.5 * t + 30.0 * std::exp(-d * d / 72.0);
}

namespace {

void check_theta(const std::vector<double>& theta, std::size_t p) {
  if (theta.size() != p) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                "theta length must equal p");
  }
  const double sum = std::accumulate(theta.begin(), theta.end(), 0.0);
  if (std::abs(sum) > 1e-10) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                "theta must sum to zero, got " + std::to_string(sum));
  }
}

std::vector<std::string> default_names(std::size_t p) {
  std::vector<std::string> names(p);
  for (std::size_t j = 0; j < p; ++j) names[j] = "c" + std::to_string(j + 1);
  return names;
}

}  // namespace

void SimConfig::validate() const {
  if (n < 1 || p < 2) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                "SimConfig needs n >= 1 and p >= 2");
  }
  check_theta(theta, p);
  if (sigma2_eta < 0.0 || sigma2_zeta < 0.0 || sigma2_e < 0.0) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                "noise variances must be nonnegative");
  }
  window();  // validates ordering against the grid span
}

SimulatedSample generate_contaminated(const SimConfig& config) {
  config.validate();
  const Grid grid = config.grid.make();
  const std::size_t m = grid.size();
  const double sd_eta = std::sqrt(config.sigma2_eta);
  const double sd_zeta = std::sqrt(config.sigma2_zeta);
  const double sd_e = std::sqrt(config.sigma2_e);

  std::vector<std::vector<double>> values(config.n * config.p);
  parallel_for(config.n, [&](std::size_t i) {
    RandomStream rng(config.seed, i);
    for (std::size_t j = 0; j < config.p; ++j) {
      const double eta = sd_eta * rng.next_normal();
      const double zeta = sd_zeta * rng.next_normal();
      std::vector<double> row(m);
      for (std::size_t k = 0; k < m; ++k) {
        const double t = grid[k];
        const double e = sd_e * rng.next_normal();
        row[k] = latent_curve(t - config.theta[j] + eta) +
                 zeta * std::sin(std::numbers::pi * t / 5.0) + e;
      }
      values[i * config.p + j] = std::move(row);
    }
  });

  SimulatedSample out;
  out.sample = MultiCurveSample(grid, config.n, config.p, std::move(values),
                                default_names(config.p));
  out.truth.reserve(config.p);
  for (std::size_t j = 0; j < config.p; ++j) {
    const double th = config.theta[j];
    out.truth.push_back(sample_curve(grid, [th](double t) { return latent_curve(t - th); }));
  }
  return out;
}

MultiCurveSample generate_pure_shift(std::size_t n, std::size_t p,
                                     const std::vector<double>& theta,
                                     const std::function<double(double)>& latent,
                                     const Grid& grid,
                                     std::optional<double> subject_shift_variance,
                                     std::uint64_t seed) {
  check_theta(theta, p);
  const std::size_t m = grid.size();
  const double sd_subject =
      subject_shift_variance ? std::sqrt(*subject_shift_variance) : 0.0;

  std::vector<std::vector<double>> values(n * p);
  for (std::size_t i = 0; i < n; ++i) {
    RandomStream rng(seed, i);
    const double subject_shift = sd_subject > 0.0 ? sd_subject * rng.next_normal() : 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      std::vector<double> row(m);
      for (std::size_t k = 0; k < m; ++k) {
        row[k] = latent(grid[k] - theta[j] - subject_shift);
      }
      values[i * p + j] = std::move(row);
    }
  }
  return MultiCurveSample(grid, n, p, std::move(values), default_names(p));
}

}  // namespace xcreg
