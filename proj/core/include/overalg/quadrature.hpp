#pragma once

#include <vector>

#include "overalg/types.hpp"

namespace overalg {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};

// Gauss-Legendre rule on [a, b]; exact for polynomials of degree <= 2*order - 1.
QuadratureRule gauss_legendre(int order, double a, double b);

// Gauss rule on [0, 1] for the weight (1 - t)^(alpha - 2), alpha > 1.
// The weight is built into the rule: sum_i w_i f(t_i) ~ int_0^1 f(t) (1-t)^(alpha-2) dt.
QuadratureRule gauss_jacobi01(int order, double alpha);

template <class F>
auto integrate(const QuadratureRule& rule, F&& f) -> decltype(f(0.0)) {
  decltype(f(0.0)) acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
  return acc;
}

// Doubles the order until two successive results differ by less than tol
// (absolute + relative mix). Throws convergence_error at the order cap.
template <class F>
auto integrate_adaptive(F&& f, double a, double b, double tol, int max_order = 1024,
                        double* achieved = nullptr) -> decltype(f(0.0)) {
  using R = decltype(f(0.0));
  int order = 16;
  R prev = integrate(gauss_legendre(order, a, b), f);
  while (order < max_order) {
    order *= 2;
    R cur = integrate(gauss_legendre(order, a, b), f);
    double diff = std::abs(cur - prev);
    double scale = std::max(1.0, std::abs(cur));
    if (diff <= tol * scale) {
      if (achieved) *achieved = diff / scale;
      return cur;
    }
    prev = cur;
  }
  throw convergence_error("integrate_adaptive: order cap reached");
}

}  // namespace overalg
