#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "xcreg/sample.hpp"
#include "xcreg/window.hpp"

namespace xcreg {

/// Shared template shape for synthetic components:
/// z(t) = 20 - 0.5 t + 30 exp(-(t - 25)^2 / 72).
double latent_curve(double t);

struct GridSpec {
  double start = 0.0;
  double stop = 50.0;
  double step = 0.5;

  Grid make() const { return Grid::uniform(start, stop, step); }
};

/// Configuration of the contamination generator. Defaults reproduce the
/// standard synthetic setup: four components shifted by (-5,-2.5,2.5,5)
/// on [0,50] with window [10,40] and low time-domain noise.
struct SimConfig {
  std::size_t n = 100;
  std::size_t p = 4;
  std::vector<double> theta = {-5.0, -2.5, 2.5, 5.0};
  double sigma2_eta = 0.1;    // subject/component time jitter variance
  double sigma2_zeta = 25.0;  // sine amplitude variance
  double sigma2_e = 1.0;      // per-node measurement error variance
  GridSpec grid;
  double window_r1 = 10.0;
  double window_r2 = 40.0;
  std::uint64_t seed = 1;

  SubintervalSpec window() const {
    return SubintervalSpec(window_r1, window_r2, grid.start, grid.stop);
  }
  void validate() const;
};

struct SimulatedSample {
  MultiCurveSample sample;
  // Noise-free shifted component templates z(t - theta_j); identical for
  // every subject, kept per component for reconstruction scoring.
  std::vector<Curve> truth;
};

/// Component j of subject i sampled at the grid nodes as
///   z(t_k - theta_j + eta_ij) + zeta_ij sin(pi t_k / 5) + e_ijk,
/// with the three noise terms independent centered normals. The latent
/// shape is evaluated analytically at the jittered positions. Each
/// subject owns one RNG stream, so the output is independent of any
/// parallel generation order.
SimulatedSample generate_contaminated(const SimConfig& config);

/// Pure shift model: component j of subject i is latent_i(t - theta_j).
/// With subject_shift_variance set, latent_i(t) = latent(t - s_i) for a
/// normal subject shift s_i, so within-subject contrasts are unaffected.
MultiCurveSample generate_pure_shift(std::size_t n, std::size_t p,
                                     const std::vector<double>& theta,
                                     const std::function<double(double)>& latent,
                                     const Grid& grid,
                                     std::optional<double> subject_shift_variance = std::nullopt,
                                     std::uint64_t seed = 1);

}  // namespace xcreg
