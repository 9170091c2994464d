#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "xcreg/quadrature.hpp"
#include "xcreg/sample.hpp"
#include "xcreg/window.hpp"

namespace xcreg {

struct MinimizerOpts {
  // Coarse scan step; <= 0 means "use the grid spacing".
  double coarse_step = 0.0;
  double tol = 1e-4;
  // Coarse-scan values within this of the best count as competing minima.
  double multimodal_eps = 1e-6;
};

struct PairwiseShift {
  double tau_hat = 0.0;
  double criterion_at_min = 0.0;
  std::vector<std::pair<double, double>> search_trace;  // coarse (tau, L)
  bool censored = false;             // tau_hat pinned to a range endpoint
  std::vector<double> near_minima;   // coarse local minima tied with the best
};

/// Mean squared L2 mismatch between component j and component k shifted
/// by tau, over a fixed window:
///   L(tau) = (1/n) sum_i int_I { X_ij(t) - X_ik(t - tau) }^2 dt.
/// Quadrature nodes are fixed in t, so L is continuous in tau. For
/// linearly interpolated samples the per-subject sums collapse into
/// precomputed cross-moment tables and one evaluation costs O(#nodes).
class PairwiseCriterion {
 public:
  PairwiseCriterion(const MultiCurveSample& sample, std::size_t j, std::size_t k,
                    const SubintervalSpec& window, const QuadratureSpec& quad = {});

  double value(double tau) const;

  double shift_lo() const { return window_.shift_lo(); }
  double shift_hi() const { return window_.shift_hi(); }
  const SubintervalSpec& window() const { return window_; }
  double grid_spacing() const { return grid_spacing_; }
  std::size_t component_j() const { return j_; }
  std::size_t component_k() const { return k_; }

 private:
  double value_fast(double tau) const;
  double value_generic(double tau) const;

  SubintervalSpec window_;
  WindowQuadrature quad_;
  std::size_t j_ = 0;
  std::size_t k_ = 0;
  std::size_t n_ = 0;
  double grid_spacing_ = 0.0;

  bool fast_path_ = false;
  // Fast path tables (linear interpolation on a common grid).
  std::vector<double> data_grid_;
  Eigen::MatrixXd cross_;             // nodes x grid: sum_i a_i(t) B_i[g]
  std::vector<double> sum_a_sq_;      // per node: sum_i a_i(t)^2
  std::vector<double> sum_b_sq_;      // per grid index: sum_i B_i[g]^2
  std::vector<double> sum_b_adj_;     // per grid index: sum_i B_i[g] B_i[g+1]
  // Generic path state.
  std::vector<Curve> curves_j_;
  std::vector<Curve> curves_k_;
  std::vector<std::vector<double>> a_at_nodes_;
};

/// Criterion minimizer: coarse scan on a zero-anchored grid followed by
/// golden-section refinement of the bracketing interval. Coarse ties go
/// to the smallest |tau|.
PairwiseShift estimate_pairwise_shift(const PairwiseCriterion& criterion,
                                      const MinimizerOpts& opts = {});

/// Runs the (j,k) and (k,j) estimates; their sum should vanish up to
/// solver and quadrature slack.
std::pair<PairwiseShift, PairwiseShift> antisymmetry_check(
    const PairwiseCriterion& c_jk, const PairwiseCriterion& c_kj,
    const MinimizerOpts& opts = {});

}  // namespace xcreg
