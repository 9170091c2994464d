#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "xcreg/curve.hpp"
#include "xcreg/window.hpp"

namespace xcreg {

/// Functional PCA of dense curves on a shared grid: cross-sectional mean,
/// leading eigenfunctions of the quadrature-weighted sample covariance,
/// and their eigenvalues. Eigenfunctions are orthonormal under the
/// trapezoid-weighted inner product and sign-fixed so the node of largest
/// magnitude is positive. total_variance carries the full covariance
/// trace so truncation keeps the variance ledger intact.
struct FpcaModel {
  Grid grid;
  Curve mean;
  std::vector<Curve> eigenfunctions;
  std::vector<double> eigenvalues;   // descending, clipped at zero
  std::vector<double> quad_weights;  // per-node weights of the inner product
  double total_variance = 0.0;

  std::size_t n_components() const { return eigenfunctions.size(); }
};

FpcaModel fit_fpca(const std::vector<Curve>& curves, std::size_t K);

double fpca_score(const FpcaModel& model, const Curve& curve, std::size_t k);

/// Truncated expansion mean + sum_{k<K} score_k phi_k. K must be between
/// 1 and the model order.
Curve reconstruct(const FpcaModel& model, const Curve& curve, std::size_t K);

/// Mean integrated squared error between matched curve lists over a
/// window (full domain when absent).
double imse(const std::vector<Curve>& originals, const std::vector<Curve>& fits,
            const std::optional<SubintervalSpec>& window = std::nullopt);

}  // namespace xcreg
