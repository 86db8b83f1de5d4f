#include <Eigen/Dense>
#include <cmath>

#include "emojiprof/error.hpp"
#include "emojiprof/model.hpp"

namespace emojiprof {
namespace {

using MatrixXd = Eigen::MatrixXd;
using VectorXd = Eigen::VectorXd;

// Solves (A) z = rhs with a few rounds of iterative refinement.
VectorXd refined_solve(const MatrixXd& a, const VectorXd& rhs) {
  Eigen::LLT<MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) throw NumericalError("ridge system is not positive definite");
  VectorXd z = llt.solve(rhs);
  const double scale = std::max(1.0, rhs.norm());
  for (int it = 0; it < 5; ++it) {
    const VectorXd r = rhs - a * z;
    if (r.norm() <= 1e-14 * scale) break;
    z += llt.solve(r);
  }
  const double residual = (rhs - a * z).norm();
  if (!std::isfinite(residual) || residual > 1e-10 * scale) {
    throw NumericalError("ridge system is singular or ill-conditioned");
  }
  return z;
}

}  // namespace

TrainedModel train_ridge(const Matrix& x, std::span<const int> y, double lambda) {
  const std::size_t n = x.rows(), d = x.cols();
  if (y.size() != n) throw ArgumentError("label count does not match the matrix");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw ArgumentError("lambda must be non-negative");
  if (n < 2) throw ArgumentError("ridge needs at least two rows");
  bool has0 = false, has1 = false;
  for (int v : y) {
    if (v != 0 && v != 1) throw ArgumentError("labels must be 0 or 1");
    (v ? has1 : has0) = true;
  }
  if (!has0 || !has1) throw ArgumentError("ridge needs both classes");

  VectorXd mean = VectorXd::Zero(static_cast<Eigen::Index>(d));
  double ymean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const double v = x(i, j);
      if (!std::isfinite(v)) throw ArgumentError("feature matrix contains non-finite values");
      mean[static_cast<Eigen::Index>(j)] += v;
    }
    ymean += y[i] ? 1.0 : -1.0;
  }
  mean /= static_cast<double>(n);
  ymean /= static_cast<double>(n);

  // Columns constant over the sample vanish after centering and get weight 0.
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 1; i < n; ++i) {
      if (x(i, j) != x(0, j)) {
        active.push_back(j);
        break;
      }
    }
  }
  const auto p = static_cast<Eigen::Index>(active.size());
  const auto rows = static_cast<Eigen::Index>(n);
  MatrixXd xc(rows, p);
  VectorXd yc(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index k = 0; k < p; ++k) {
      const auto j = active[static_cast<std::size_t>(k)];
      xc(i, k) = x(static_cast<std::size_t>(i), j) - mean[static_cast<Eigen::Index>(j)];
    }
    yc[i] = (y[static_cast<std::size_t>(i)] ? 1.0 : -1.0) - ymean;
  }

  // Normal equations of the mean loss: (Xc'Xc + n lambda I) w = Xc'yc.
  const double reg = static_cast<double>(n) * lambda;
  VectorXd w_active = VectorXd::Zero(p);
  if (p > 0) {
    if (p <= rows) {
      MatrixXd a = xc.transpose() * xc;
      a.diagonal().array() += reg;
      w_active = refined_solve(a, xc.transpose() * yc);
    } else {
      MatrixXd k = xc * xc.transpose();
      k.diagonal().array() += reg;
      w_active = xc.transpose() * refined_solve(k, yc);
    }
  }

  TrainedModel m;
  m.kind = ModelKind::RidgeLinear;
  m.n_features = d;
  m.hyper = RidgeHyper{lambda};
  m.linear.weights.assign(d, 0.0);
  double bias = ymean;
  for (Eigen::Index k = 0; k < p; ++k) {
    const auto j = active[static_cast<std::size_t>(k)];
    m.linear.weights[j] = w_active[k];
    bias -= w_active[k] * mean[static_cast<Eigen::Index>(j)];
  }
  m.linear.bias = bias;
  return m;
}

}  // namespace emojiprof
