#include "overalg/spectral_ops.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "overalg/parallel.hpp"

namespace overalg {

const char* to_string(SpectralOp op) {
  switch (op) {
    case SpectralOp::D0: return "D0";
    case SpectralOp::D1: return "D1";
    case SpectralOp::Dm1: return "Dm1";
    case SpectralOp::Q0: return "Q0";
    case SpectralOp::Q1: return "Q1";
    case SpectralOp::Qm1: return "Qm1";
  }
  return "?";
}

namespace {

constexpr double kPoleRadius = 1e-10;

void pole_guard(Complex s) {
  if (std::abs(s) < kPoleRadius || std::abs(s - 0.5 * I) < kPoleRadius ||
      std::abs(s + 0.5 * I) < kPoleRadius)
    throw pole_error("spectral coefficient evaluated on the pole set {0, i/2, -i/2}");
}

// Coefficient building blocks, written in x = is.
Complex cp_base(Complex s, double a) {
  pole_guard(s);
  const Complex x = I * s;
  return -(x - 0.5) * (x + 0.5 - a) / (2.0 * x);
}

Complex cm_coef(Complex s, double a) {
  pole_guard(s);
  const Complex x = I * s;
  return (x + 0.5) * (x + a - 0.5) / (2.0 * x);
}

Complex m2_term(Complex s, double a) {
  pole_guard(s);
  const Complex x = I * s;
  return (x + 0.5 - a) / (2.0 * x * (x - 0.5));
}

Complex m1_term(Complex s, double a) {
  pole_guard(s);
  const Complex x = I * s;
  return (x + 0.5 - a) / (x - 0.5);
}

Complex q_raise_base(Complex s, double a) {
  pole_guard(s);
  const Complex x = I * s;
  return (x + 0.5) * (x + 0.5 - a) / (2.0 * x);
}

}  // namespace

std::vector<ShiftTerm> spectral_descriptor(SpectralOp op, Alpha alpha) {
  const double a = alpha.value();
  switch (op) {
    case SpectralOp::D0:
      return {{0, Complex{}, [](Complex, int m) { return Complex(m, 0.0); }}};
    case SpectralOp::D1:
      return {{1, Complex{}, [](Complex s, int m) { return double(m) + 0.5 + I * s; }}};
    case SpectralOp::Dm1:
      return {{-1, Complex{}, [](Complex s, int m) { return -double(m) + 0.5 + I * s; }}};
    case SpectralOp::Q0:
      return {{0, I,
               [a](Complex s, int m) {
                 return cp_base(s, a) + double(m) * double(m) * m2_term(s, a);
               }},
              {0, -I, [a](Complex s, int) { return cm_coef(s, a); }}};
    case SpectralOp::Q1:
      return {{1, I,
               [a](Complex s, int m) {
                 return q_raise_base(s, a) + double(m) * double(m) * m2_term(s, a) +
                        double(m) * m1_term(s, a);
               }},
              {1, -I, [a](Complex s, int) { return cm_coef(s, a); }}};
    case SpectralOp::Qm1:
      return {{-1, I,
               [a](Complex s, int m) {
                 return q_raise_base(s, a) + double(m) * double(m) * m2_term(s, a) -
                        double(m) * m1_term(s, a);
               }},
              {-1, -I, [a](Complex s, int) { return cm_coef(s, a); }}};
  }
  throw std::invalid_argument("spectral_descriptor: unknown op");
}

SpectralFunction apply_spectral(SpectralOp op, const SpectralFunction& F) {
  const auto descriptor = spectral_descriptor(op, F.alpha());
  SpectralFunction out(F.alpha());
  for (const auto& term : F.terms()) {
    for (const auto& shift : descriptor) {
      auto coef = shift.coef;
      auto radial = term.radial;
      const Complex sigma = shift.s_shift;
      const int m = term.mode;
      out.add_term(m + shift.mode_delta, [coef, radial, sigma, m](Complex s) {
        return coef(s, m) * radial(s + sigma);
      });
    }
  }
  return out;
}

SpectralOp spectral_partner(AlgebraOp op) {
  switch (op) {
    case AlgebraOp::L0: return SpectralOp::D0;
    case AlgebraOp::L1: return SpectralOp::D1;
    case AlgebraOp::Lm1: return SpectralOp::Dm1;
    case AlgebraOp::M0: return SpectralOp::Q0;
    case AlgebraOp::M1: return SpectralOp::Q1;
    case AlgebraOp::Mm1: return SpectralOp::Qm1;
    default:
      throw std::invalid_argument("spectral_partner: no partner for single-variable op");
  }
}

double verify_intertwine(const CoefMatrix& f, AlgebraOp aop, SpectralOp sop,
                         const std::vector<SamplePoint>& points) {
  if (spectral_partner(aop) != sop)
    throw std::invalid_argument("verify_intertwine: operators are not an intertwined pair");

  const CoefMatrix lf = apply_algebra(aop, f);
  const SpectralFunction lhs = transform(lf);
  const SpectralFunction rhs = apply_spectral(sop, transform(f));

  std::vector<double> residual(points.size(), 0.0);
  std::vector<std::exception_ptr> errors(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    try {
      const Complex a = lhs.eval(points[i].phi, points[i].s);
      const Complex b = rhs.eval(points[i].phi, points[i].s);
      residual[i] = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  double worst = 0.0;
  for (double r : residual) worst = std::max(worst, r);
  return worst;
}

double kernel_identity_residual(Complex z, Complex u, double phi, Complex s, Alpha alpha) {
  const double a = alpha.value();
  const Complex beta = 0.5 + I * s;
  const Complex eip = std::exp(I * phi);
  const Complex w = std::conj(z);

  const Complex P = w * eip / (1.0 - w * eip);
  const Complex M = (u / eip) / (1.0 - u / eip);
  const Complex g3 = w * u / (1.0 - w * u);

  const Complex K = kernel_eval(phi, s, z, u, alpha);
  const Complex lhs = K * (a + beta * (P + M) + 2.0 * (Complex(a, 0.0) - beta) * g3);

  // Shift side: at s+i the kernel exponent drops to beta-1, so its phi
  // derivatives come out in closed form through P and M.
  const Complex Kp = kernel_eval(phi, s + I, z, u, alpha);
  const Complex Km = kernel_eval(phi, s - I, z, u, alpha);
  const Complex bm1 = beta - 1.0;
  const Complex d2phi =
      Kp * (-bm1 * bm1 * (P - M) * (P - M) - bm1 * (P * (1.0 + P) + M * (1.0 + M)));
  const Complex rhs = cp_base(s, a) * Kp + m2_term(s, a) * (-d2phi) + cm_coef(s, a) * Km;

  return std::abs(lhs - rhs) / (std::abs(K) + 1e-30);
}

}  // namespace overalg
