#pragma once

#include <functional>
#include <vector>

#include "overalg/kernel.hpp"
#include "overalg/model.hpp"
#include "overalg/types.hpp"

namespace overalg {

// Difference operators acting on the spectral side. The D family is
// diagonal in s; the Q family shifts s by +-i and has simple poles at
// s = 0 and s = -i/2, guarded by pole_error.
enum class SpectralOp { D0, D1, Dm1, Q0, Q1, Qm1 };

const char* to_string(SpectralOp op);

// One summand of a spectral operator: the image of a term at mode m with
// radial part r(s) picks up coef(s, m) * r(s + s_shift) at mode
// m + mode_delta.
struct ShiftTerm {
  int mode_delta;
  Complex s_shift;
  std::function<Complex(Complex s, int m)> coef;
};

std::vector<ShiftTerm> spectral_descriptor(SpectralOp op, Alpha alpha);

SpectralFunction apply_spectral(SpectralOp op, const SpectralFunction& F);

// The spectral operator intertwined with a given algebra action; only the
// six two-variable combinations have one.
SpectralOp spectral_partner(AlgebraOp op);

struct SamplePoint {
  double phi;
  Complex s;
};

// Max over the sample points of
//   |T(op f) - S T(f)| / max(|T(op f)|, |S T(f)|, 1)
// where T is the transform and S the spectral partner. Throws
// invalid_argument unless sop == spectral_partner(aop).
double verify_intertwine(const CoefMatrix& f, AlgebraOp aop, SpectralOp sop,
                         const std::vector<SamplePoint>& points);

// Pointwise check of the kernel identity behind the (M0, Q0) pair: the
// Euler operator acting on the kernel against the shift operator acting on
// its s-dependence, both in closed form. Returns
// |lhs - rhs| / (|kernel| + tiny).
double kernel_identity_residual(Complex z, Complex u, double phi, Complex s, Alpha alpha);

}  // namespace overalg
