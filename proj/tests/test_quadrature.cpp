#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "overalg/quadrature.hpp"
#include "overalg/special.hpp"

using namespace overalg;
using doctest::Approx;

namespace {

double monomial_moment(const QuadratureRule& r, int j) {
  double acc = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i)
    acc += r.weights[i] * std::pow(r.nodes[i], j);
  return acc;
}

}  // namespace

TEST_CASE("gauss_legendre exactness and shape") {
  for (int n : {1, 2, 3, 5, 8, 16, 33, 64}) {
    const QuadratureRule r = gauss_legendre(n, 0.0, 1.0);
    REQUIRE(static_cast<int>(r.nodes.size()) == n);
    double wsum = 0.0;
    for (double w : r.weights) {
      CHECK(w > 0.0);
      wsum += w;
    }
    CHECK(wsum == Approx(1.0).epsilon(1e-14));
    // exact moments up to degree 2n-1
    for (int j = 1; j < 2 * n && j <= 25; ++j)
      CHECK(monomial_moment(r, j) == Approx(1.0 / (j + 1.0)).epsilon(1e-13));
    // one degree past the guarantee must fail for small n
    if (n <= 3) CHECK(std::abs(monomial_moment(r, 2 * n) - 1.0 / (2 * n + 1.0)) > 1e-9);
  }
  CHECK_THROWS_AS(gauss_legendre(0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("gauss_legendre interval map") {
  const QuadratureRule r = gauss_legendre(12, -2.0, 5.0);
  double wsum = 0.0;
  for (double w : r.weights) wsum += w;
  CHECK(wsum == Approx(7.0).epsilon(1e-14));
  double acc = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i)
    acc += r.weights[i] * r.nodes[i] * r.nodes[i];
  CHECK(acc == Approx((125.0 + 8.0) / 3.0).epsilon(1e-14));
}

TEST_CASE("adaptive integration of an oscillatory integrand") {
  // int_0^{2 pi} e^{cos x} cos(sin x) dx = 2 pi
  auto f = [](double x) { return std::exp(std::cos(x)) * std::cos(std::sin(x)); };
  double achieved = 0.0;
  const double v = integrate_adaptive(f, 0.0, 2.0 * std::numbers::pi, 1e-12, 1024, &achieved);
  CHECK(v == Approx(2.0 * std::numbers::pi).epsilon(1e-12));
  CHECK(achieved <= 1e-12);
  // int_0^1 cos(40 x) dx
  auto g = [](double x) { return std::cos(40.0 * x); };
  CHECK(integrate_adaptive(g, 0.0, 1.0, 1e-12) == Approx(std::sin(40.0) / 40.0).epsilon(1e-10));
}

TEST_CASE("adaptive integration reports non-convergence") {
  auto step = [](double x) { return x < 0.3141 ? 0.0 : 1.0; };
  CHECK_THROWS_AS(integrate_adaptive(step, 0.0, 1.0, 1e-13), convergence_error);
}

TEST_CASE("gauss_jacobi01 matches beta moments") {
  for (double alpha : {1.5, 2.0, 2.75, 3.5, 6.0}) {
    const QuadratureRule r = gauss_jacobi01(12, alpha);
    for (int j = 0; j <= 20; ++j) {
      // int_0^1 t^j (1-t)^(alpha-2) dt = B(j+1, alpha-1)
      const double want = std::exp(std::lgamma(j + 1.0) + std::lgamma(alpha - 1.0) -
                                   std::lgamma(j + alpha));
      CHECK(monomial_moment(r, j) == Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("gauss_jacobi01 reduces to legendre at alpha = 2") {
  // same point set; the two constructions order the nodes differently
  QuadratureRule gj = gauss_jacobi01(9, 2.0);
  QuadratureRule gl = gauss_legendre(9, 0.0, 1.0);
  std::vector<std::pair<double, double>> a, b;
  for (int i = 0; i < 9; ++i) {
    a.emplace_back(gj.nodes[i], gj.weights[i]);
    b.emplace_back(gl.nodes[i], gl.weights[i]);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (int i = 0; i < 9; ++i) {
    CHECK(a[i].first == Approx(b[i].first).epsilon(1e-12));
    CHECK(a[i].second == Approx(b[i].second).epsilon(1e-12));
  }
}

TEST_CASE("gauss_jacobi01 nodes stay interior") {
  for (double alpha : {1.05, 1.5, 4.0}) {
    const QuadratureRule r = gauss_jacobi01(10, alpha);
    for (double t : r.nodes) {
      CHECK(t > 0.0);
      CHECK(t < 1.0);
    }
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    CHECK(wsum == Approx(1.0 / (alpha - 1.0)).epsilon(1e-11));
  }
}
