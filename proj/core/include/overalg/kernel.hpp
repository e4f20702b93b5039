#pragma once

#include <functional>
#include <vector>

#include "overalg/model.hpp"

namespace overalg {

// K(phi, s; z, u) = (1 - conj(z) e^{i phi})^{-1/2-is} (1 - u e^{-i phi})^{-1/2-is}
//                   / (1 - conj(z) u)^{alpha-1/2-is},  |z| < 1, |u| < 1.
// All three bases lie in the right half-plane, so the principal powers are
// single-valued; this is asserted at runtime.
Complex kernel_eval(double phi, Complex s, Complex z, Complex u, Alpha alpha);

// Taylor coefficient of the kernel in the conj(z)^k u^l basis:
//   a_{kl}(phi, s) = e^{i(k-l) phi} A_{kl}(s),
//   A_{kl}(s) = sum_{m=0}^{min(k,l)} [(alpha-1/2-is)_m / m!]
//               * [(1/2+is)_{k-m} / (k-m)!] * [(1/2+is)_{l-m} / (l-m)!].
// A_{kl} is a polynomial in s, hence entire; it may be evaluated anywhere.
Complex kernel_coeff_A(int k, int l, Complex s, Alpha alpha);
Complex kernel_coeff(int k, int l, double phi, Complex s, Alpha alpha);

// A finite Fourier sum F(phi, s) = sum_terms e^{i mode phi} radial(s) whose
// radial parts are entire in s. Terms may share a mode.
class SpectralFunction {
 public:
  struct Term {
    int mode;
    std::function<Complex(Complex)> radial;
  };

  explicit SpectralFunction(Alpha alpha) : alpha_(alpha) {}

  Alpha alpha() const { return alpha_; }
  const std::vector<Term>& terms() const { return terms_; }
  void add_term(int mode, std::function<Complex(Complex)> radial);

  Complex eval(double phi, Complex s) const;
  // Sum of the radial parts attached to one mode.
  Complex mode_eval(int mode, Complex s) const;
  // Sorted distinct modes.
  std::vector<int> modes() const;

  SpectralFunction& operator+=(const SpectralFunction& o);
  SpectralFunction& operator*=(Complex scalar);
  friend SpectralFunction operator+(SpectralFunction a, const SpectralFunction& b) {
    return a += b;
  }
  friend SpectralFunction operator*(Complex s, SpectralFunction a) { return a *= s; }

 private:
  Alpha alpha_;
  std::vector<Term> terms_;
};

// Integral transform of f against the kernel over the product of weighted
// disks, in closed form: the coefficient c_{kl} picks up the factor
// [pi/(alpha-1)]^2 * [k!/(alpha)_k] * [l!/(alpha)_l] and lands on mode k-l.
SpectralFunction transform(const CoefMatrix& f);

// The same double integral evaluated numerically in polar coordinates by a
// tensor-product rule (radial Gauss rule with the boundary weight built in,
// uniform angular grid), refined until successive refinements differ by < tol.
// Serves as the independent oracle for transform(). Throws convergence_error
// when the refinement cap is reached (alpha very close to 1).
Complex quadrature_transform(const CoefMatrix& f, double phi, Complex s, double tol);

// Spectral density in s (the phi direction carries plain Lebesgue measure):
//   |Gamma(alpha-1/2+is)|^2 / Gamma(alpha)^2 * s sinh(pi s) / cosh(pi s).
double plancherel_weight(double s, Alpha alpha);
// The same density written purely through gamma factors:
//   |Gamma(alpha-1/2+is) Gamma(1/2+is) / (Gamma(alpha) Gamma(is))|^2.
double plancherel_weight_gamma_form(double s, Alpha alpha);

struct ParsevalResult {
  double ratio;       // weighted spectral norm over model norm
  double residual;    // quadrature convergence estimate (relative)
  double integral;    // the weighted spectral norm itself
  double s_max_used;
};

// Computes int_0^{s_max} int_0^{2pi} |F|^2 weight ds dphi with F = transform(f),
// the phi integral done exactly by mode orthogonality, and returns the ratio
// against <f, f>. s_max <= 0 selects the cutoff automatically from the
// exponential decay of the density; an explicit s_max that leaves a tail
// above tolerance throws convergence_error.
ParsevalResult parseval_check(const CoefMatrix& f, double s_max, double tol);

// Polarized version: the weighted spectral pairing of transform(f) and
// transform(g), for comparison against <f, g>.
Complex spectral_pairing(const CoefMatrix& f, const CoefMatrix& g, double s_max, double tol);

// Observation helper: max over the grid of |E(s) - E(-s)| / max E, where
// E(s) = sum_m |F_m(s)|^2 is the mode-summed spectral energy density.
// Reported, never asserted; the reflected density need not match for
// complex coefficient data.
double reflection_defect(const CoefMatrix& f, double s_max, int grid_points);

}  // namespace overalg
