#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "xcreg/registration.hpp"
#include "xcreg/simgen.hpp"

namespace xcreg {

// ---------------------------------------------------------------------------
// IMSE benefit study: reconstruction error with and without registration.

struct ImseStudyConfig {
  std::vector<double> sigma2_eta_grid = {0.25, 0.5, 1.0, 2.0};
  std::vector<double> sigma2_zeta_grid = {25.0};
  std::size_t replications = 100;
  std::size_t n = 100;
  std::size_t n_eigen = 2;  // eigenfunctions kept in both arms
  SimConfig base;           // theta, grid, window, sigma2_e, master seed
  RegistrationOptions registration;
};

struct ImseReplication {
  std::uint64_t seed = 0;
  double imse_naive = 0.0;
  double imse_xcr = 0.0;
  double pct_decrease = 0.0;
  std::vector<double> theta_hat;
  bool failed = false;
  std::string error;
};

struct ImseCell {
  double sigma2_eta = 0.0;
  double sigma2_zeta = 0.0;
  std::vector<ImseReplication> replications;
  double mean_pct_decrease = 0.0;
  double sd_pct_decrease = 0.0;
  double q25 = 0.0, q50 = 0.0, q75 = 0.0;
  std::size_t failures = 0;
};

struct ImseStudyReport {
  ImseStudyConfig config;
  std::vector<ImseCell> cells;
  double wall_clock_seconds = 0.0;

  const ImseCell* find_cell(double sigma2_eta, double sigma2_zeta) const;
  nlohmann::json to_json() const;
  /// Cell means, one row per functional-noise level (columns = time-noise levels).
  std::string to_csv_table() const;
};

ImseStudyReport run_imse_study(const ImseStudyConfig& config);

/// One replication of the comparison, exposed for tests: returns
/// (imse_naive, imse_xcr, theta_hat).
ImseReplication run_imse_replication(const SimConfig& sim, std::size_t n_eigen,
                                     const RegistrationOptions& reg);

// ---------------------------------------------------------------------------
// Convergence-rate study: RMSE of the shift estimates vs sample size.

struct RateStudyConfig {
  std::vector<std::size_t> n_list = {50, 100, 200, 400, 800};
  std::size_t replications = 200;
  SimConfig base;  // noise defaults for the rate regime set in make_default()
  std::size_t pair_j = 0;  // the pair reported as the bivariate estimate
  std::size_t pair_k = 1;
  RegistrationOptions registration;

  static RateStudyConfig make_default();
};

struct RateReplication {
  std::uint64_t seed = 0;
  double tau_err = 0.0;               // tau_hat - tau_true for the tracked pair
  std::vector<double> theta_err;      // per component
};

struct RateLevel {
  std::size_t n = 0;
  std::vector<RateReplication> replications;
  double rmse_tau = 0.0;
  std::vector<double> rmse_theta;
};

struct MomentDiagnostics {
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
};

struct RateStudyReport {
  RateStudyConfig config;
  std::vector<RateLevel> levels;
  double slope_tau = 0.0;                       // log RMSE vs log n
  std::vector<double> slope_theta;
  MomentDiagnostics normality_tau;              // sqrt(n)-scaled errors, largest n
  std::vector<MomentDiagnostics> normality_theta;
  double wall_clock_seconds = 0.0;

  nlohmann::json to_json() const;
  std::string to_csv_table() const;
};

RateStudyReport run_rate_study(const RateStudyConfig& config);

// ---------------------------------------------------------------------------
// Per-subject cross-component distance change after registration.

struct XdSubjectRow {
  std::size_t subject = 0;
  double xd_before = 0.0;
  double xd_after = 0.0;
};

struct XdStudyReport {
  std::vector<XdSubjectRow> subjects;
  std::vector<double> theta_hat;
  double total_before = 0.0;
  double total_after = 0.0;
  double pct_reduction = 0.0;
  double frac_worsened = 0.0;
  double wall_clock_seconds = 0.0;

  nlohmann::json to_json() const;
  std::string to_csv_table() const;  // kernel-density-ready per-subject rows
};

/// XD_i(0) - XD_i(theta_hat) per subject. theta defaults to a fresh
/// registration of the sample.
XdStudyReport run_xd_study(const MultiCurveSample& sample,
                           const SubintervalSpec& window,
                           const std::optional<std::vector<double>>& theta = std::nullopt,
                           const RegistrationOptions& opts = {});

// Sample moments used by the rate diagnostics (exposed for tests).
double sample_skewness(const std::vector<double>& xs);
double sample_excess_kurtosis(const std::vector<double>& xs);
/// OLS slope of y on x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace xcreg
