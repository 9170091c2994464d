#include "xcreg/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "xcreg/csv_io.hpp"
#include "xcreg/fpca.hpp"
#include "xcreg/parallel.hpp"
#include "xcreg/rng.hpp"

namespace xcreg {

using nlohmann::json;

namespace {

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sd_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double mu = mean_of(xs);
  double s = 0.0;
  for (double x : xs) s += (x - mu) * (x - mu);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

double quantile_of(std::vector<double> xs, double q) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const double pos = q * static_cast<double>(xs.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  const double f = pos - static_cast<double>(lo);
  return (1.0 - f) * xs[lo] + f * xs[hi];
}

json sim_config_json(const SimConfig& c) {
  return json{{"n", c.n},
              {"p", c.p},
              {"theta", c.theta},
              {"sigma2_eta", c.sigma2_eta},
              {"sigma2_zeta", c.sigma2_zeta},
              {"sigma2_e", c.sigma2_e},
              {"grid", {{"start", c.grid.start}, {"stop", c.grid.stop}, {"step", c.grid.step}}},
              {"window", {{"r1", c.window_r1}, {"r2", c.window_r2}}},
              {"seed", c.seed}};
}

// Grid nodes of `grid` strictly inside [lo, hi] (inclusive with slack).
Grid subgrid(const Grid& grid, double lo, double hi) {
  std::vector<double> pts;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] >= lo - 1e-9 && grid[i] <= hi + 1e-9) pts.push_back(grid[i]);
  }
  return Grid(std::move(pts));
}

}  // namespace

double sample_skewness(const std::vector<double>& xs) {
  const double mu = mean_of(xs);
  double m2 = 0.0, m3 = 0.0;
  for (double x : xs) {
    const double d = x - mu;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= static_cast<double>(xs.size());
  m3 /= static_cast<double>(xs.size());
  return m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
}

double sample_excess_kurtosis(const std::vector<double>& xs) {
  const double mu = mean_of(xs);
  double m2 = 0.0, m4 = 0.0;
  for (double x : xs) {
    const double d = x - mu;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= static_cast<double>(xs.size());
  m4 /= static_cast<double>(xs.size());
  return m2 > 0.0 ? m4 / (m2 * m2) - 3.0 : 0.0;
}

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

// ---------------------------------------------------------------------------
// IMSE study

ImseReplication run_imse_replication(const SimConfig& sim, std::size_t n_eigen,
                                     const RegistrationOptions& reg) {
  ImseReplication rep;
  rep.seed = sim.seed;

  const SimulatedSample gen = generate_contaminated(sim);
  const MultiCurveSample& sample = gen.sample;
  const SubintervalSpec window = sim.window();
  const std::size_t n = sample.n_subjects();
  const std::size_t p = sample.n_components();

  // Registration arm: estimate shifts, align, fit the pooled aligned
  // curves, then move the fits back to the original time axis.
  const RegistrationResult registration = register_components(sample, window, reg);
  rep.theta_hat = registration.global.theta_hat;
  const MultiCurveSample aligned = apply_shifts(sample, rep.theta_hat, window);

  std::vector<Curve> aligned_pool = aligned.curves();
  const FpcaModel model_xcr = fit_fpca(aligned_pool, n_eigen);

  // Scoring region: where every back-shifted fit is defined. Both arms
  // are integrated over this same set of original grid nodes.
  double theta_min = rep.theta_hat[0], theta_max = rep.theta_hat[0];
  for (double th : rep.theta_hat) {
    theta_min = std::min(theta_min, th);
    theta_max = std::max(theta_max, th);
  }
  const Grid& aligned_grid = aligned.grid();
  const Grid score_grid = subgrid(sample.grid(), aligned_grid.front() + theta_max,
                                  aligned_grid.back() + theta_min);

  // Naive arm: pool the raw curves as if they were replicates of one process.
  std::vector<Curve> raw_pool = sample.curves();
  const FpcaModel model_naive = fit_fpca(raw_pool, n_eigen);

  std::vector<Curve> truth_curves, naive_fits, xcr_fits;
  truth_curves.reserve(n * p);
  naive_fits.reserve(n * p);
  xcr_fits.reserve(n * p);
  const std::size_t ms = score_grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const Curve naive_fit = reconstruct(model_naive, sample.curve(i, j), n_eigen);
      const Curve xcr_fit = reconstruct(model_xcr, aligned.curve(i, j), n_eigen);
      std::vector<double> tv(ms), nv(ms), xv(ms);
      for (std::size_t t = 0; t < ms; ++t) {
        const double s = score_grid[t];
        tv[t] = gen.truth[j].evaluate(s);
        nv[t] = naive_fit.evaluate(s);
        xv[t] = xcr_fit.evaluate(s - rep.theta_hat[j]);  // undo the alignment
      }
      truth_curves.emplace_back(score_grid, std::move(tv));
      naive_fits.emplace_back(score_grid, std::move(nv));
      xcr_fits.emplace_back(score_grid, std::move(xv));
    }
  }
  rep.imse_naive = imse(truth_curves, naive_fits);
  rep.imse_xcr = imse(truth_curves, xcr_fits);
  rep.pct_decrease = 100.0 * (1.0 - rep.imse_xcr / rep.imse_naive);
  return rep;
}

ImseStudyReport run_imse_study(const ImseStudyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ImseStudyReport report;
  report.config = config;

  std::size_t cell_index = 0;
  for (double s2z : config.sigma2_zeta_grid) {
    for (double s2e : config.sigma2_eta_grid) {
      ImseCell cell;
      cell.sigma2_eta = s2e;
      cell.sigma2_zeta = s2z;
      cell.replications.resize(config.replications);

      parallel_for(config.replications, [&](std::size_t b) {
        SimConfig sim = config.base;
        sim.n = config.n;
        sim.sigma2_eta = s2e;
        sim.sigma2_zeta = s2z;
        sim.seed = derive_seed(config.base.seed, cell_index, b);
        try {
          cell.replications[b] = run_imse_replication(sim, config.n_eigen, config.registration);
        } catch (const std::exception& e) {
          cell.replications[b].seed = sim.seed;
          cell.replications[b].failed = true;
          cell.replications[b].error = e.what();
        }
      });

      std::vector<double> decreases;
      for (const auto& r : cell.replications) {
        if (r.failed) {
          ++cell.failures;
        } else {
          decreases.push_back(r.pct_decrease);
        }
      }
      if (!decreases.empty()) {
        cell.mean_pct_decrease = mean_of(decreases);
        cell.sd_pct_decrease = sd_of(decreases);
        cell.q25 = quantile_of(decreases, 0.25);
        cell.q50 = quantile_of(decreases, 0.50);
        cell.q75 = quantile_of(decreases, 0.75);
      }
      report.cells.push_back(std::move(cell));
      ++cell_index;
    }
  }
  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

const ImseCell* ImseStudyReport::find_cell(double sigma2_eta, double sigma2_zeta) const {
  for (const auto& c : cells) {
    if (c.sigma2_eta == sigma2_eta && c.sigma2_zeta == sigma2_zeta) return &c;
  }
  return nullptr;
}

json ImseStudyReport::to_json() const {
  json cells_json = json::array();
  for (const auto& c : cells) {
    json reps = json::array();
    for (const auto& r : c.replications) {
      json rj{{"seed", r.seed}, {"failed", r.failed}};
      if (r.failed) {
        rj["error"] = r.error;
      } else {
        rj["imse_naive"] = r.imse_naive;
        rj["imse_xcr"] = r.imse_xcr;
        rj["pct_decrease"] = r.pct_decrease;
        rj["theta_hat"] = r.theta_hat;
      }
      reps.push_back(std::move(rj));
    }
    cells_json.push_back(json{{"sigma2_eta", c.sigma2_eta},
                              {"sigma2_zeta", c.sigma2_zeta},
                              {"mean_pct_decrease", c.mean_pct_decrease},
                              {"sd_pct_decrease", c.sd_pct_decrease},
                              {"q25", c.q25},
                              {"q50", c.q50},
                              {"q75", c.q75},
                              {"failures", c.failures},
                              {"replications", std::move(reps)}});
  }
  return json{{"study", "imse"},
              {"config",
               {{"sigma2_eta_grid", config.sigma2_eta_grid},
                {"sigma2_zeta_grid", config.sigma2_zeta_grid},
                {"replications", config.replications},
                {"n", config.n},
                {"n_eigen", config.n_eigen},
                {"base", sim_config_json(config.base)}}},
              {"cells", std::move(cells_json)},
              {"wall_clock_seconds", wall_clock_seconds}};
}

std::string ImseStudyReport::to_csv_table() const {
  std::ostringstream out;
  out << "sigma2_zeta";
  for (double e : config.sigma2_eta_grid) out << ",sigma2_eta=" << format_double(e);
  out << "\n";
  for (double z : config.sigma2_zeta_grid) {
    out << format_double(z);
    for (double e : config.sigma2_eta_grid) {
      const ImseCell* cell = find_cell(e, z);
      out << "," << (cell ? format_double(cell->mean_pct_decrease) : "");
    }
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Rate study

RateStudyConfig RateStudyConfig::make_default() {
  RateStudyConfig c;
  // Shift noise off keeps the pairwise target exactly theta_j - theta_k;
  // sampling error then comes from the functional and measurement noise.
  c.base.sigma2_eta = 0.0;
  c.base.sigma2_zeta = 25.0;
  c.base.sigma2_e = 1.0;
  return c;
}

RateStudyReport run_rate_study(const RateStudyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (config.n_list.size() < 3) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::NumericError,
                "rate study needs at least 3 sample sizes");
  }
  RateStudyReport report;
  report.config = config;
  const std::size_t p = config.base.p;
  const auto pairs = component_pairs(p);
  std::size_t tracked_pair = 0;
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    if (pairs[r].first == config.pair_j && pairs[r].second == config.pair_k) tracked_pair = r;
  }
  const double tau_true = config.base.theta[config.pair_j] - config.base.theta[config.pair_k];

  for (std::size_t level = 0; level < config.n_list.size(); ++level) {
    RateLevel lv;
    lv.n = config.n_list[level];
    lv.replications.resize(config.replications);
    parallel_for(config.replications, [&](std::size_t b) {
      SimConfig sim = config.base;
      sim.n = lv.n;
      sim.seed = derive_seed(config.base.seed, 1000 + level, b);
      RateReplication& rep = lv.replications[b];
      rep.seed = sim.seed;
      const SimulatedSample gen = generate_contaminated(sim);
      const RegistrationResult reg =
          register_components(gen.sample, sim.window(), config.registration);
      rep.tau_err = reg.pairwise[tracked_pair].tau_hat - tau_true;
      rep.theta_err.resize(p);
      for (std::size_t j = 0; j < p; ++j) {
        rep.theta_err[j] = reg.global.theta_hat[j] - sim.theta[j];
      }
    });

    double acc_tau = 0.0;
    std::vector<double> acc_theta(p, 0.0);
    for (const auto& r : lv.replications) {
      acc_tau += r.tau_err * r.tau_err;
      for (std::size_t j = 0; j < p; ++j) acc_theta[j] += r.theta_err[j] * r.theta_err[j];
    }
    lv.rmse_tau = std::sqrt(acc_tau / static_cast<double>(config.replications));
    lv.rmse_theta.resize(p);
    for (std::size_t j = 0; j < p; ++j) {
      lv.rmse_theta[j] = std::sqrt(acc_theta[j] / static_cast<double>(config.replications));
    }
    report.levels.push_back(std::move(lv));
  }

  std::vector<double> log_n, log_rmse_tau;
  std::vector<std::vector<double>> log_rmse_theta(p);
  for (const auto& lv : report.levels) {
    log_n.push_back(std::log(static_cast<double>(lv.n)));
    log_rmse_tau.push_back(std::log(lv.rmse_tau));
    for (std::size_t j = 0; j < p; ++j) log_rmse_theta[j].push_back(std::log(lv.rmse_theta[j]));
  }
  report.slope_tau = ols_slope(log_n, log_rmse_tau);
  report.slope_theta.resize(p);
  for (std::size_t j = 0; j < p; ++j) report.slope_theta[j] = ols_slope(log_n, log_rmse_theta[j]);

  const RateLevel& top = report.levels.back();
  const double root_n = std::sqrt(static_cast<double>(top.n));
  std::vector<double> scaled_tau;
  std::vector<std::vector<double>> scaled_theta(p);
  for (const auto& r : top.replications) {
    scaled_tau.push_back(root_n * r.tau_err);
    for (std::size_t j = 0; j < p; ++j) scaled_theta[j].push_back(root_n * r.theta_err[j]);
  }
  report.normality_tau = {sample_skewness(scaled_tau), sample_excess_kurtosis(scaled_tau)};
  report.normality_theta.resize(p);
  for (std::size_t j = 0; j < p; ++j) {
    report.normality_theta[j] = {sample_skewness(scaled_theta[j]),
                                 sample_excess_kurtosis(scaled_theta[j])};
  }
  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json RateStudyReport::to_json() const {
  const std::size_t p = config.base.p;
  json levels_json = json::array();
  for (const auto& lv : levels) {
    json reps = json::array();
    for (const auto& r : lv.replications) {
      reps.push_back(json{{"seed", r.seed}, {"tau_err", r.tau_err}, {"theta_err", r.theta_err}});
    }
    levels_json.push_back(json{{"n", lv.n},
                               {"rmse_tau", lv.rmse_tau},
                               {"rmse_theta", lv.rmse_theta},
                               {"replications", std::move(reps)}});
  }
  json normality_theta_json = json::array();
  for (std::size_t j = 0; j < p; ++j) {
    normality_theta_json.push_back(json{{"skewness", normality_theta[j].skewness},
                                        {"excess_kurtosis", normality_theta[j].excess_kurtosis}});
  }
  return json{{"study", "rates"},
              {"config",
               {{"n_list", config.n_list},
                {"replications", config.replications},
                {"pair", {config.pair_j, config.pair_k}},
                {"base", sim_config_json(config.base)}}},
              {"levels", std::move(levels_json)},
              {"slope_tau", slope_tau},
              {"slope_theta", slope_theta},
              {"normality_tau",
               {{"skewness", normality_tau.skewness},
                {"excess_kurtosis", normality_tau.excess_kurtosis}}},
              {"normality_theta", std::move(normality_theta_json)},
              {"wall_clock_seconds", wall_clock_seconds}};
}

std::string RateStudyReport::to_csv_table() const {
  std::ostringstream out;
  const std::size_t p = config.base.p;
  out << "n,rmse_tau";
  for (std::size_t j = 0; j < p; ++j) out << ",rmse_theta_" << (j + 1);
  out << "\n";
  for (const auto& lv : levels) {
    out << lv.n << "," << format_double(lv.rmse_tau);
    for (std::size_t j = 0; j < p; ++j) out << "," << format_double(lv.rmse_theta[j]);
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// XD study

XdStudyReport run_xd_study(const MultiCurveSample& sample, const SubintervalSpec& window,
                           const std::optional<std::vector<double>>& theta,
                           const RegistrationOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  XdStudyReport report;
  report.theta_hat =
      theta ? *theta : register_components(sample, window, opts).global.theta_hat;
  const std::vector<double> zeros(sample.n_components(), 0.0);

  report.subjects.resize(sample.n_subjects());
  parallel_for(sample.n_subjects(), [&](std::size_t i) {
    const auto curves = sample.subject_curves(i);
    report.subjects[i] = {i, cross_component_distance(curves, zeros, window, opts.quad),
                          cross_component_distance(curves, report.theta_hat, window, opts.quad)};
  });

  std::size_t worsened = 0;
  for (const auto& row : report.subjects) {
    report.total_before += row.xd_before;
    report.total_after += row.xd_after;
    if (row.xd_after > row.xd_before) ++worsened;
  }
  report.pct_reduction =
      report.total_before > 0.0
          ? 100.0 * (1.0 - report.total_after / report.total_before)
          : 0.0;
  report.frac_worsened =
      static_cast<double>(worsened) / static_cast<double>(report.subjects.size());
  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json XdStudyReport::to_json() const {
  json rows = json::array();
  for (const auto& s : subjects) {
    rows.push_back(json{{"subject", s.subject},
                        {"xd_before", s.xd_before},
                        {"xd_after", s.xd_after},
                        {"decrease", s.xd_before - s.xd_after}});
  }
  return json{{"study", "xd"},
              {"theta_hat", theta_hat},
              {"total_before", total_before},
              {"total_after", total_after},
              {"pct_reduction", pct_reduction},
              {"frac_worsened", frac_worsened},
              {"subjects", std::move(rows)},
              {"wall_clock_seconds", wall_clock_seconds}};
}

std::string XdStudyReport::to_csv_table() const {
  std::ostringstream out;
  out << "subject,xd_before,xd_after,decrease\n";
  for (const auto& s : subjects) {
    out << s.subject << "," << format_double(s.xd_before) << "," << format_double(s.xd_after)
        << "," << format_double(s.xd_before - s.xd_after) << "\n";
  }
  return out.str();
}

}  // namespace xcreg
