#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "xcreg/quadrature.hpp"
#include "xcreg/sample.hpp"
#include "xcreg/window.hpp"

namespace xcreg {

/// Contrast matrix mapping a global shift vector to the stacked pairwise
/// shifts: one +1/-1 row per pair (j,k), j<k in lexicographic order, then
/// an all-ones row pinning the shifts to sum to zero.
struct ContrastMatrix {
  std::size_t p = 0;
  Eigen::MatrixXd rows;  // (p(p-1)/2 + 1) x p

  std::size_t n_pairs() const { return p * (p - 1) / 2; }
};

ContrastMatrix build_contrast_matrix(std::size_t p);

/// Lexicographic pair list ((0,1), (0,2), ..., (p-2,p-1)).
std::vector<std::pair<std::size_t, std::size_t>> component_pairs(std::size_t p);

struct GlobalShiftResult {
  std::vector<double> theta_hat;         // p entries, sums to zero
  std::vector<double> tau_hat_stacked;   // pairwise estimates then 0
  std::vector<double> residuals;         // tau_hat_stacked - A theta_hat
  std::vector<std::string> component_names;
};

/// Least-squares recovery of the global shifts from pairwise estimates:
/// theta = (A^T A)^{-1} A^T (tau, 0). The appended zero row encodes the
/// sum-to-zero identifiability constraint.
GlobalShiftResult solve_global_shifts(const std::vector<double>& tau_pairs,
                                      std::size_t p,
                                      std::vector<std::string> component_names = {});

/// Shifts component j of every subject to t -> X_ij(t + theta_j). Output
/// curves live on the original grid nodes restricted to the intersection
/// of the shifted domains.
MultiCurveSample apply_shifts(const MultiCurveSample& sample,
                              const std::vector<double>& theta,
                              const SubintervalSpec& window);

/// Total cross-component distance of one subject under candidate shifts:
/// XD(theta) = sum_{j<k} int_I { X_j(t + theta_j) - X_k(t + theta_k) }^2 dt.
double cross_component_distance(const std::vector<Curve>& subject_curves,
                                const std::vector<double>& theta,
                                const SubintervalSpec& window,
                                const QuadratureSpec& quad = {});

}  // namespace xcreg
