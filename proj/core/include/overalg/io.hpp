#pragma once

#include <iosfwd>
#include <string>

#include "overalg/model.hpp"

namespace overalg {

// JSON round-trip for coefficient matrices:
//   { "alpha": a, "coeffs": [ row_k = [ [re, im], ... ], ... ] }.
std::string matrix_to_json(const CoefMatrix& f);
CoefMatrix matrix_from_json(const std::string& text);

// Uniform grid comparison of the two closed forms of the spectral density.
// Header line: s,weight_left_form,weight_right_form,abs_diff
// count == 0 writes the header only; count == 1 writes s_lo alone.
void write_density_csv(std::ostream& os, Alpha alpha, double s_lo, double s_hi, int count);

}  // namespace overalg
