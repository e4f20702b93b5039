#include "overalg/model.hpp"

#include <algorithm>
#include <cmath>

#include "overalg/special.hpp"

namespace overalg {

Alpha::Alpha(double v) : v_(v) {
  if (!(v > 1.0)) throw std::invalid_argument("Alpha: value must be > 1");
}

double taylor_weight(double alpha, int k) {
  double w = 1.0;
  for (int j = 1; j <= k; ++j) w *= j / (alpha + j - 1.0);
  return w;
}

CoefMatrix::CoefMatrix(Alpha alpha, int max_k, int max_l)
    : alpha_(alpha), max_k_(max_k), max_l_(max_l) {
  if (max_k < 0 || max_l < 0) throw std::invalid_argument("CoefMatrix: negative degree bound");
  c_.assign(static_cast<std::size_t>(max_k + 1) * (max_l + 1), Complex{});
}

CoefMatrix CoefMatrix::monomial(Alpha alpha, int k, int l, Complex coef) {
  CoefMatrix m(alpha, k, l);
  m.set(k, l, coef);
  return m;
}

Complex CoefMatrix::at(int k, int l) const {
  if (k < 0 || l < 0 || k > max_k_ || l > max_l_) return Complex{};
  return c_[static_cast<std::size_t>(k) * (max_l_ + 1) + l];
}

void CoefMatrix::set(int k, int l, Complex v) {
  if (k < 0 || l < 0 || k > max_k_ || l > max_l_)
    throw std::out_of_range("CoefMatrix::set: index outside degree bounds");
  require_finite(v, "CoefMatrix::set");
  c_[static_cast<std::size_t>(k) * (max_l_ + 1) + l] = v;
}

CoefMatrix& CoefMatrix::operator+=(const CoefMatrix& o) {
  if (!(alpha_ == o.alpha_)) throw std::invalid_argument("CoefMatrix: alpha mismatch");
  if (o.max_k_ > max_k_ || o.max_l_ > max_l_) {
    CoefMatrix grown(alpha_, std::max(max_k_, o.max_k_), std::max(max_l_, o.max_l_));
    for (int k = 0; k <= max_k_; ++k)
      for (int l = 0; l <= max_l_; ++l) grown.set(k, l, at(k, l));
    *this = grown;
  }
  for (int k = 0; k <= o.max_k_; ++k)
    for (int l = 0; l <= o.max_l_; ++l) set(k, l, at(k, l) + o.at(k, l));
  return *this;
}

CoefMatrix& CoefMatrix::operator-=(const CoefMatrix& o) { return *this += -1.0 * o; }

CoefMatrix& CoefMatrix::operator*=(Complex scalar) {
  for (auto& v : c_) v *= scalar;
  return *this;
}

double CoefMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

GroupElement::GroupElement(Complex a_, Complex b_) : a(a_), b(b_) {
  double det = std::norm(a) - std::norm(b);
  if (std::abs(det - 1.0) > 1e-12)
    throw std::invalid_argument("GroupElement: |a|^2 - |b|^2 must equal 1");
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  return GroupElement(a * o.a + b * std::conj(o.b), a * o.b + b * std::conj(o.a));
}

const char* to_string(AlgebraOp op) {
  switch (op) {
    case AlgebraOp::L0z: return "L0z";
    case AlgebraOp::L1z: return "L1z";
    case AlgebraOp::Lm1z: return "Lm1z";
    case AlgebraOp::L0u: return "L0u";
    case AlgebraOp::L1u: return "L1u";
    case AlgebraOp::Lm1u: return "Lm1u";
    case AlgebraOp::L0: return "L0";
    case AlgebraOp::L1: return "L1";
    case AlgebraOp::Lm1: return "Lm1";
    case AlgebraOp::M0: return "M0";
    case AlgebraOp::M1: return "M1";
    case AlgebraOp::Mm1: return "Mm1";
  }
  return "?";
}

Complex inner_product(const CoefMatrix& f, const CoefMatrix& g) {
  if (!(f.alpha() == g.alpha())) throw std::invalid_argument("inner_product: alpha mismatch");
  const double alpha = f.alpha().value();
  const int kmax = std::min(f.max_k(), g.max_k());
  const int lmax = std::min(f.max_l(), g.max_l());
  Complex acc{};
  double wk = 1.0;
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) wk *= k / (alpha + k - 1.0);
    double wl = 1.0;
    for (int l = 0; l <= lmax; ++l) {
      if (l > 0) wl *= l / (alpha + l - 1.0);
      acc += f.at(k, l) * std::conj(g.at(k, l)) * wk * wl;
    }
  }
  return acc;
}

double norm_sq(const CoefMatrix& f) { return inner_product(f, f).real(); }

namespace {

// Single-variable ladder actions on the monomial basis. In z:
//   lower: d/dz,  diag: z d/dz + alpha/2,  raise: z^2 d/dz + alpha z.
// In u the raise/lower roles swap because the second slot is conjugated:
//   d/dubar lowers l while ubar^2 d/dubar + alpha ubar raises it.
double mono_factor(AlgebraOp op, double alpha, int k, int l) {
  switch (op) {
    case AlgebraOp::L0z: return k + alpha / 2.0;
    case AlgebraOp::L1z: return k + alpha;   // -> (k+1, l)
    case AlgebraOp::Lm1z: return k;          // -> (k-1, l)
    case AlgebraOp::L0u: return l + alpha / 2.0;
    case AlgebraOp::L1u: return l;           // -> (k, l-1)
    case AlgebraOp::Lm1u: return l + alpha;  // -> (k, l+1)
    default: break;
  }
  return 0.0;
}

}  // namespace

CoefMatrix apply_algebra(AlgebraOp op, const CoefMatrix& f) {
  const double alpha = f.alpha().value();
  const int K = f.max_k(), L = f.max_l();

  // Composite operators expand into the single-variable ones.
  switch (op) {
    case AlgebraOp::L0:
      return apply_algebra(AlgebraOp::L0z, f) - apply_algebra(AlgebraOp::L0u, f);
    case AlgebraOp::M0:
      return apply_algebra(AlgebraOp::L0z, f) + apply_algebra(AlgebraOp::L0u, f);
    case AlgebraOp::L1:
      return apply_algebra(AlgebraOp::L1z, f) - apply_algebra(AlgebraOp::L1u, f);
    case AlgebraOp::M1:
      return apply_algebra(AlgebraOp::L1z, f) + apply_algebra(AlgebraOp::L1u, f);
    case AlgebraOp::Lm1:
      return apply_algebra(AlgebraOp::Lm1u, f) - apply_algebra(AlgebraOp::Lm1z, f);
    case AlgebraOp::Mm1:
      return apply_algebra(AlgebraOp::Lm1u, f) + apply_algebra(AlgebraOp::Lm1z, f);
    default: break;
  }

  int dk = 0, dl = 0;
  switch (op) {
    case AlgebraOp::L1z: dk = 1; break;
    case AlgebraOp::Lm1z: dk = -1; break;
    case AlgebraOp::L1u: dl = -1; break;
    case AlgebraOp::Lm1u: dl = 1; break;
    default: break;  // L0z, L0u are diagonal
  }

  CoefMatrix out(f.alpha(), std::max(0, K + std::max(0, dk)), std::max(0, L + std::max(0, dl)));
  for (int k = 0; k <= K; ++k)
    for (int l = 0; l <= L; ++l) {
      Complex c = f.at(k, l);
      if (c == Complex{}) continue;
      double factor = mono_factor(op, alpha, k, l);
      if (factor == 0.0) continue;
      out.set(k + dk, l + dl, out.at(k + dk, l + dl) + factor * c);
    }
  return out;
}

namespace {

// coefficients of p*q, truncated to degree trunc
std::vector<Complex> conv_trunc(const std::vector<Complex>& p, const std::vector<Complex>& q,
                                int trunc) {
  std::vector<Complex> r(static_cast<std::size_t>(trunc) + 1, Complex{});
  for (std::size_t i = 0; i < p.size() && i <= static_cast<std::size_t>(trunc); ++i) {
    if (p[i] == Complex{}) continue;
    std::size_t jmax = std::min(q.size() - 1, static_cast<std::size_t>(trunc) - i);
    for (std::size_t j = 0; j <= jmax; ++j) r[i + j] += p[i] * q[j];
  }
  return r;
}

// Taylor coefficients of c0^{-deg-expo} * (lin0 + lin1 w)^{deg} * (1 + x w)^{-expo-deg},
// assembled for the substitution action: see apply_group.
std::vector<Complex> mobius_power_series(Complex num0, Complex num1, Complex den0, Complex den1,
                                         double expo, int deg, int trunc) {
  // (num0 + num1 w)^deg expanded exactly
  std::vector<Complex> top(static_cast<std::size_t>(deg) + 1);
  {
    Complex coef = int_pow(num0, deg);
    if (num0 == Complex{}) {
      // degenerate only when num0 = 0: single surviving term
      for (int j = 0; j <= deg; ++j) top[j] = (j == deg) ? int_pow(num1, deg) : Complex{};
    } else {
      top[0] = coef;
      for (int j = 1; j <= deg; ++j) {
        coef *= (num1 / num0) * static_cast<double>(deg - j + 1) / static_cast<double>(j);
        top[j] = coef;
      }
    }
  }
  // (den0 + den1 w)^{-expo-deg} = den0^{-expo-deg} (1 + x w)^{-expo-deg}, x = den1/den0
  Complex x = den1 / den0;
  std::vector<Complex> bottom(static_cast<std::size_t>(trunc) + 1);
  bottom[0] = 1.0;
  for (int n = 1; n <= trunc; ++n)
    bottom[n] = bottom[n - 1] * (-x) * (expo + deg + n - 1.0) / static_cast<double>(n);
  auto series = conv_trunc(top, bottom, trunc);
  // den0^{-deg} is a plain integer power; den0^{-expo} is handled by the caller
  // together with its conjugate partner so the combined scalar stays single-valued.
  Complex scale = int_pow(den0, -deg);
  for (auto& v : series) v *= scale;
  return series;
}

}  // namespace

GroupActionResult apply_group(const GroupElement& g, const CoefMatrix& f, int trunc) {
  if (trunc < std::max(f.max_k(), f.max_l()))
    throw std::invalid_argument("apply_group: trunc below the degree of f");
  const double alpha = f.alpha().value();
  const Complex a = g.a, b = g.b;

  // The two fractional prefactors combine into (a conj a)^{-alpha}, a positive
  // real power, so the action is single-valued with no branch choice left.
  const double scalar = std::exp(-alpha * std::log(std::norm(a)));

  // z slot: z -> (a z + b) / (conj b z + conj a), prefactor (conj b z + conj a)^{-alpha}
  // u slot: ubar -> (conj a ubar + conj b) / (b ubar + a), prefactor (b ubar + a)^{-alpha}
  std::vector<std::vector<Complex>> zs(static_cast<std::size_t>(f.max_k()) + 1);
  std::vector<std::vector<Complex>> us(static_cast<std::size_t>(f.max_l()) + 1);
  for (int k = 0; k <= f.max_k(); ++k)
    zs[k] = mobius_power_series(b, a, std::conj(a), std::conj(b), alpha, k, trunc);
  for (int l = 0; l <= f.max_l(); ++l)
    us[l] = mobius_power_series(std::conj(b), std::conj(a), a, b, alpha, l, trunc);

  CoefMatrix out(f.alpha(), trunc, trunc);
  for (int p = 0; p <= trunc; ++p)
    for (int q = 0; q <= trunc; ++q) {
      Complex acc{};
      for (int k = 0; k <= f.max_k(); ++k)
        for (int l = 0; l <= f.max_l(); ++l) {
          Complex c = f.at(k, l);
          if (c == Complex{}) continue;
          acc += c * zs[k][p] * us[l][q];
        }
      out.set(p, q, scalar * acc);
    }

  // Tail estimate from the outermost retained band (row p = trunc, column q = trunc).
  double tail = 0.0;
  for (int q = 0; q <= trunc; ++q)
    tail += std::norm(out.at(trunc, q)) * taylor_weight(alpha, trunc) * taylor_weight(alpha, q);
  for (int p = 0; p < trunc; ++p)
    tail += std::norm(out.at(p, trunc)) * taylor_weight(alpha, p) * taylor_weight(alpha, trunc);
  return GroupActionResult{std::move(out), std::sqrt(tail)};
}

Complex eval_poly(const CoefMatrix& f, Complex z, Complex w) {
  Complex acc{};
  for (int k = f.max_k(); k >= 0; --k) {
    Complex row{};
    for (int l = f.max_l(); l >= 0; --l) row = row * w + f.at(k, l);
    acc = acc * z + row;
  }
  return acc;
}

}  // namespace overalg
