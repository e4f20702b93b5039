#include "overalg/special.hpp"

#include <numbers>

namespace overalg {

namespace {

constexpr double pi = std::numbers::pi;

// Lanczos g = 7, 9 terms. Good for ~13 significant digits on Re z >= 1/2.
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// log sin(pi z), stable for large |Im z|: the naive sin overflows once
// |Im z| is a few hundred, so split off the dominant exponential.
Complex log_sin_pi(Complex z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  Complex w = pi * z;
  if (z.imag() < 20.0) return std::log(std::sin(w));
  // sin w = e^{-iw} (e^{2iw} - 1) / (2i), |e^{2iw}| < 1 here
  Complex q = std::exp(2.0 * I * w);
  return -I * w + std::log((q - 1.0) / (2.0 * I));
}

Complex log_gamma_core(Complex z) {
  // Re z >= 1/2 assumed
  z -= 1.0;
  Complex x = lanczos_c[0];
  for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (z + static_cast<double>(i));
  Complex t = z + 7.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

Complex pochhammer(Complex a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative n");
  Complex p = 1.0;
  for (int i = 0; i < n; ++i) p *= a + static_cast<double>(i);
  return p;
}

Complex log_gamma(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw std::domain_error("log_gamma: pole at nonpositive integer");
  if (z.real() >= 0.5) return log_gamma_core(z);
  // Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(pi) - log_sin_pi(z) - log_gamma_core(1.0 - z);
}

double abs_gamma_sq(Complex z) { return std::exp(2.0 * log_gamma(z).real()); }

Complex pow_principal(Complex b, Complex e) {
  if (b == Complex{0.0, 0.0}) {
    if (e.imag() == 0.0 && e.real() > 0.0) return 0.0;
    throw std::domain_error("pow_principal: zero base");
  }
  return std::exp(e * std::log(b));
}

Complex int_pow(Complex b, int n) {
  if (n < 0) {
    if (b == Complex{0.0, 0.0}) throw std::domain_error("int_pow: zero base, negative power");
    return 1.0 / int_pow(b, -n);
  }
  Complex r = 1.0;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

}  // namespace overalg
