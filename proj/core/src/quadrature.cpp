#include "overalg/quadrature.hpp"

#include <Eigen/Dense>
#include <numbers>
#include <stdexcept>

namespace overalg {

QuadratureRule gauss_legendre(int order, double a, double b) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");

  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);

  const int n = order;
  // Newton iteration on P_n from the Chebyshev-like initial guess; only the
  // lower half is solved, the rest follows by symmetry.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one final recurrence pass so dp matches the converged x
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = x;
    rule.nodes[n - 1 - i] = -x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

QuadratureRule gauss_jacobi01(int order, double alpha) {
  if (order < 1) throw std::invalid_argument("gauss_jacobi01: order must be >= 1");
  if (!(alpha > 1.0)) throw std::invalid_argument("gauss_jacobi01: need alpha > 1");

  // Golub-Welsch for the Jacobi weight (1-x)^A on [-1,1] with A = alpha-2 > -1,
  // then map x -> t = (1+x)/2 and rescale so the [0,1] weight is (1-t)^(alpha-2).
  const double A = alpha - 2.0;
  const int n = order;

  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  auto diag = [A](int k) {
    if (k == 0) return -A / (A + 2.0);
    double h = 2.0 * k + A;
    return -A * A / (h * (h + 2.0));
  };
  auto offdiag_sq = [A](int k) {
    // b_k for monic Jacobi (A, 0), k >= 1
    double h = 2.0 * k + A;
    return 4.0 * k * k * (k + A) * (k + A) / (h * h * (h + 1.0) * (h - 1.0));
  };
  for (int k = 0; k < n; ++k) {
    J(k, k) = diag(k);
    if (k >= 1) {
      double b = std::sqrt(offdiag_sq(k));
      J(k, k - 1) = b;
      J(k - 1, k) = b;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_jacobi01: eigensolver failed");

  const double mu0 = std::pow(2.0, A + 1.0) / (A + 1.0);  // int_{-1}^{1} (1-x)^A dx
  const double scale = std::pow(2.0, -(alpha - 1.0));

  QuadratureRule rule;
  rule.order = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    rule.nodes[i] = 0.5 * (1.0 + x);
    rule.weights[i] = scale * mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace overalg
