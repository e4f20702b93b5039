#pragma once

// Test-side oracles, independent of the library's closed forms: Cauchy-circle
// differentiation and Taylor extraction, and the finite commutator table.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "overalg/kernel.hpp"
#include "overalg/model.hpp"

namespace oracle {

using overalg::Complex;

// d/dz at z0 through an M-point circle of radius h: exact for polynomials of
// degree < M up to rounding.
template <class F>
Complex circle_derivative(F&& f, Complex z0, double h = 0.5, int M = 24) {
  Complex acc{};
  for (int j = 0; j < M; ++j) {
    const double th = 2.0 * std::numbers::pi * j / M;
    const Complex w = std::polar(1.0, th);
    acc += f(z0 + h * w) * std::conj(w);
  }
  return acc / (static_cast<double>(M) * h);
}

// Action of each generator on the evaluation of f at (z, w), built only from
// eval_poly and circle derivatives.
inline Complex op_action_at(overalg::AlgebraOp op, const overalg::CoefMatrix& f, Complex z,
                            Complex w) {
  using overalg::AlgebraOp;
  const double a = f.alpha().value();
  auto fz = [&](Complex zz) { return overalg::eval_poly(f, zz, w); };
  auto fw = [&](Complex ww) { return overalg::eval_poly(f, z, ww); };
  const Complex v = overalg::eval_poly(f, z, w);
  const Complex dz = circle_derivative(fz, z);
  const Complex dw = circle_derivative(fw, w);
  switch (op) {
    case AlgebraOp::L0z: return z * dz + 0.5 * a * v;
    case AlgebraOp::L1z: return z * z * dz + a * z * v;
    case AlgebraOp::Lm1z: return dz;
    case AlgebraOp::L0u: return w * dw + 0.5 * a * v;
    case AlgebraOp::L1u: return dw;
    case AlgebraOp::Lm1u: return w * w * dw + a * w * v;
    case AlgebraOp::L0: return op_action_at(AlgebraOp::L0z, f, z, w) - op_action_at(AlgebraOp::L0u, f, z, w);
    case AlgebraOp::M0: return op_action_at(AlgebraOp::L0z, f, z, w) + op_action_at(AlgebraOp::L0u, f, z, w);
    case AlgebraOp::L1: return op_action_at(AlgebraOp::L1z, f, z, w) - op_action_at(AlgebraOp::L1u, f, z, w);
    case AlgebraOp::M1: return op_action_at(AlgebraOp::L1z, f, z, w) + op_action_at(AlgebraOp::L1u, f, z, w);
    case AlgebraOp::Lm1: return op_action_at(AlgebraOp::Lm1u, f, z, w) - op_action_at(AlgebraOp::Lm1z, f, z, w);
    case AlgebraOp::Mm1: return op_action_at(AlgebraOp::Lm1u, f, z, w) + op_action_at(AlgebraOp::Lm1z, f, z, w);
  }
  return {};
}

// a_{kl} extracted from the kernel itself on an N x N bi-circle of radius r0;
// the kernel series runs in conj(z)^k u^l, so z is placed at r0 e^{-i theta}.
inline std::vector<std::vector<Complex>> extract_kernel_coeffs(double phi, Complex s,
                                                               overalg::Alpha alpha, int kmax,
                                                               double r0 = 0.75, int N = 128) {
  std::vector<std::vector<Complex>> K(N, std::vector<Complex>(N));
  for (int j = 0; j < N; ++j)
    for (int m = 0; m < N; ++m) {
      const double t1 = 2.0 * std::numbers::pi * j / N;
      const double t2 = 2.0 * std::numbers::pi * m / N;
      K[j][m] = overalg::kernel_eval(phi, s, std::polar(r0, -t1), std::polar(r0, t2), alpha);
    }
  // Row pass in the u angle, then column pass in the z angle.
  std::vector<std::vector<Complex>> row(N, std::vector<Complex>(kmax + 1));
  for (int j = 0; j < N; ++j)
    for (int l = 0; l <= kmax; ++l) {
      Complex acc{};
      for (int m = 0; m < N; ++m)
        acc += K[j][m] * std::polar(1.0, -l * (2.0 * std::numbers::pi * m / N));
      row[j][l] = acc;
    }
  std::vector<std::vector<Complex>> out(kmax + 1, std::vector<Complex>(kmax + 1));
  for (int k = 0; k <= kmax; ++k)
    for (int l = 0; l <= kmax; ++l) {
      Complex acc{};
      for (int j = 0; j < N; ++j)
        acc += row[j][l] * std::polar(1.0, -k * (2.0 * std::numbers::pi * j / N));
      out[k][l] = acc / (static_cast<double>(N) * N * std::pow(r0, k + l));
    }
  return out;
}

struct CommutatorRule {
  overalg::AlgebraOp a, b;
  double scale;  // [a, b] = scale * target; scale 0 means the bracket vanishes
  overalg::AlgebraOp target;
};

// Bracket table of the six two-variable generators.
inline std::vector<CommutatorRule> commutator_table() {
  using overalg::AlgebraOp;
  return {
      {AlgebraOp::L0, AlgebraOp::L1, 1.0, AlgebraOp::L1},
      {AlgebraOp::L0, AlgebraOp::Lm1, -1.0, AlgebraOp::Lm1},
      {AlgebraOp::L1, AlgebraOp::Lm1, 2.0, AlgebraOp::L0},
      {AlgebraOp::L0, AlgebraOp::M0, 0.0, AlgebraOp::L0},
      {AlgebraOp::L0, AlgebraOp::M1, 1.0, AlgebraOp::M1},
      {AlgebraOp::L0, AlgebraOp::Mm1, -1.0, AlgebraOp::Mm1},
      {AlgebraOp::M0, AlgebraOp::L1, 1.0, AlgebraOp::M1},
      {AlgebraOp::M0, AlgebraOp::Lm1, 1.0, AlgebraOp::Mm1},
      {AlgebraOp::M0, AlgebraOp::M1, 1.0, AlgebraOp::L1},
      {AlgebraOp::M0, AlgebraOp::Mm1, 1.0, AlgebraOp::Lm1},
      {AlgebraOp::M1, AlgebraOp::Mm1, -2.0, AlgebraOp::L0},
      {AlgebraOp::L1, AlgebraOp::Mm1, -2.0, AlgebraOp::M0},
      {AlgebraOp::M1, AlgebraOp::Lm1, 2.0, AlgebraOp::M0},
  };
}

// max |coef| of A B f - B A f - scale * (target f)
inline double commutator_defect(const CommutatorRule& r, const overalg::CoefMatrix& f) {
  using overalg::apply_algebra;
  overalg::CoefMatrix lhs = apply_algebra(r.a, apply_algebra(r.b, f));
  lhs -= apply_algebra(r.b, apply_algebra(r.a, f));
  if (r.scale != 0.0) {
    overalg::CoefMatrix want = apply_algebra(r.target, f);
    want *= Complex(r.scale, 0.0);
    lhs -= want;
  }
  return lhs.max_abs();
}

inline double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace oracle
