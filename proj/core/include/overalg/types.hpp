#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace overalg {

using Complex = std::complex<double>;

constexpr Complex I{0.0, 1.0};

// Evaluation of a shift-operator prefactor at one of its poles (s = 0 or s = -+ i/2).
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

// An adaptive rule hit its refinement cap before reaching the requested tolerance.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_finite(Complex v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

inline void require_finite(Complex v, const char* what) {
  if (!is_finite(v)) throw std::range_error(std::string(what) + ": non-finite value");
}

}  // namespace overalg
