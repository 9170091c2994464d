#include "xcreg/fpca.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "xcreg/errors.hpp"
#include "xcreg/quadrature.hpp"

namespace xcreg {

FpcaModel fit_fpca(const std::vector<Curve>& curves, std::size_t K) {
  const std::size_t n = curves.size();
  if (n < 2) {
    throw_error(ErrorKind::InsufficientData, ErrorCode::NumericError,
                "FPCA needs at least 2 curves");
  }
  const Grid grid = curves.front().grid();
  const std::size_t m = grid.size();
  if (K < 1 || K > m) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::NumericError,
                "K must lie in [1, grid length]");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!curves[i].grid().same_as(grid)) {
      throw_error(ErrorKind::GridMismatch, ErrorCode::InvariantViolation,
                  "curve " + std::to_string(i) + " is on a different grid");
    }
  }

  Eigen::MatrixXd x(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < m; ++t) x(i, t) = curves[i].values()[t];
  }
  const Eigen::RowVectorXd mean = x.colwise().mean();
  const Eigen::MatrixXd centered = x.rowwise() - mean;
  // Unbiased cross-sectional covariance at the grid nodes.
  const Eigen::MatrixXd cov =
      centered.transpose() * centered / static_cast<double>(n - 1);

  const std::vector<double> w = trapezoid_weights(grid);
  Eigen::VectorXd sqrt_w(m);
  for (std::size_t t = 0; t < m; ++t) sqrt_w(t) = std::sqrt(w[t]);

  // Symmetrized eigenproblem of the weighted covariance operator.
  Eigen::MatrixXd sym = cov;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) sym(a, b) *= sqrt_w(a) * sqrt_w(b);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  if (eig.info() != Eigen::Success) {
    throw_error(ErrorKind::NumericError, ErrorCode::NumericError,
                "covariance eigendecomposition failed");
  }

  FpcaModel model;
  model.grid = grid;
  model.mean = Curve(grid, std::vector<double>(mean.data(), mean.data() + m),
                     curves.front().interp());
  model.quad_weights = w;
  model.total_variance = std::max(0.0, eig.eigenvalues().sum());

  // Eigen returns ascending order; take the top K and map back.
  for (std::size_t k = 0; k < K; ++k) {
    const auto col = static_cast<Eigen::Index>(m - 1 - k);
    double lambda = eig.eigenvalues()(col);
    if (lambda < -1e-10) lambda = 0.0;
    lambda = std::max(lambda, 0.0);
    Eigen::VectorXd phi = eig.eigenvectors().col(col);
    for (std::size_t t = 0; t < m; ++t) {
      phi(t) = sqrt_w(t) > 0.0 ? phi(t) / sqrt_w(t) : 0.0;
    }
    // Sign convention: largest-magnitude node is positive.
    Eigen::Index imax = 0;
    phi.cwiseAbs().maxCoeff(&imax);
    if (phi(imax) < 0.0) phi = -phi;
    model.eigenvalues.push_back(lambda);
    model.eigenfunctions.emplace_back(
        grid, std::vector<double>(phi.data(), phi.data() + m), curves.front().interp());
  }
  return model;
}

double fpca_score(const FpcaModel& model, const Curve& curve, std::size_t k) {
  if (!curve.grid().same_as(model.grid)) {
    throw_error(ErrorKind::GridMismatch, ErrorCode::NumericError,
                "curve grid does not match the model grid");
  }
  const auto& phi = model.eigenfunctions[k].values();
  const auto& mu = model.mean.values();
  const auto& v = curve.values();
  double score = 0.0;
  for (std::size_t t = 0; t < v.size(); ++t) {
    score += model.quad_weights[t] * (v[t] - mu[t]) * phi[t];
  }
  return score;
}

Curve reconstruct(const FpcaModel& model, const Curve& curve, std::size_t K) {
  if (K < 1 || K > model.n_components()) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::NumericError,
                "reconstruct needs 1 <= K <= model order");
  }
  if (!curve.grid().same_as(model.grid)) {
    throw_error(ErrorKind::GridMismatch, ErrorCode::NumericError,
                "curve grid does not match the model grid");
  }
  std::vector<double> out(model.mean.values());
  for (std::size_t k = 0; k < K; ++k) {
    const double score = fpca_score(model, curve, k);
    const auto& phi = model.eigenfunctions[k].values();
    for (std::size_t t = 0; t < out.size(); ++t) out[t] += score * phi[t];
  }
  return Curve(model.grid, std::move(out), curve.interp());
}

double imse(const std::vector<Curve>& originals, const std::vector<Curve>& fits,
            const std::optional<SubintervalSpec>& window) {
  if (originals.size() != fits.size() || originals.empty()) {
    throw_error(ErrorKind::InvalidArgument, ErrorCode::NumericError,
                "imse needs matched, nonempty curve lists");
  }
  const Grid grid = originals.front().grid();
  for (std::size_t i = 0; i < originals.size(); ++i) {
    if (!originals[i].grid().same_as(grid) || !fits[i].grid().same_as(grid)) {
      throw_error(ErrorKind::GridMismatch, ErrorCode::NumericError,
                  "imse curve " + std::to_string(i) + " is on a different grid");
    }
  }
  const SubintervalSpec w = window ? *window : SubintervalSpec::full(grid);
  const WindowQuadrature wq(grid, w, QuadratureSpec{});
  double total = 0.0;
  for (std::size_t i = 0; i < originals.size(); ++i) {
    double acc = 0.0;
    for (std::size_t t = 0; t < wq.nodes.size(); ++t) {
      const double d = originals[i].evaluate(wq.nodes[t]) - fits[i].evaluate(wq.nodes[t]);
      acc += wq.weights[t] * d * d;
    }
    total += acc;
  }
  return total / static_cast<double>(originals.size());
}

}  // namespace xcreg
