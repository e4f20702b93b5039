#pragma once

#include "overalg/types.hpp"

namespace overalg {

// Rising factorial a(a+1)...(a+n-1); 1 for n = 0.
Complex pochhammer(Complex a, int n);

// Principal-branch log Gamma. Accurate to >= 12 significant digits for
// |z| <= 50 with Re z >= 1/2; the reflection formula covers Re z < 1/2.
// Throws std::domain_error at the poles z = 0, -1, -2, ...
Complex log_gamma(Complex z);

// |Gamma(z)|^2 = exp(2 Re log_gamma(z)).
double abs_gamma_sq(Complex z);

// exp(e * log b) with the principal log. All power functions in this
// library use the principal branch, argument in (-pi, pi].
Complex pow_principal(Complex b, Complex e);

// b^n for integer n (n may be negative; b must be nonzero then).
Complex int_pow(Complex b, int n);

}  // namespace overalg
