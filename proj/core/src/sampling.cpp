#include "overalg/sampling.hpp"

#include <cmath>
#include <numbers>

namespace overalg {

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

Complex Rng::box(double re_lo, double re_hi, double im_lo, double im_hi) {
  const double re = uniform(re_lo, re_hi);
  const double im = uniform(im_lo, im_hi);
  return Complex(re, im);
}

Complex Rng::disk(double radius) {
  const double r = radius * std::sqrt(uniform());
  const double th = uniform(0.0, 2.0 * std::numbers::pi);
  return std::polar(r, th);
}

CoefMatrix random_matrix(Rng& rng, Alpha alpha, int degree) {
  if (degree < 0) throw std::invalid_argument("random_matrix: degree must be >= 0");
  CoefMatrix f(alpha, degree, degree);
  for (int k = 0; k <= degree; ++k)
    for (int l = 0; l <= degree; ++l) f.set(k, l, rng.box(-1.0, 1.0, -1.0, 1.0));
  return f;
}

namespace {

bool clears_poles(Complex s, double margin) {
  return std::abs(s) >= margin && std::abs(s - Complex(0.0, 0.5)) >= margin &&
         std::abs(s + Complex(0.0, 0.5)) >= margin;
}

}  // namespace

std::vector<SamplePoint> real_sample_points(Rng& rng, int count, double s_lo, double s_hi,
                                            double margin) {
  std::vector<SamplePoint> pts;
  pts.reserve(count);
  while (static_cast<int>(pts.size()) < count) {
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Complex s(rng.uniform(s_lo, s_hi), 0.0);
    if (!clears_poles(s, margin)) continue;
    pts.push_back({phi, s});
  }
  return pts;
}

std::vector<SamplePoint> complex_sample_points(Rng& rng, int count, double im_max,
                                               double margin) {
  std::vector<SamplePoint> pts;
  pts.reserve(count);
  while (static_cast<int>(pts.size()) < count) {
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Complex s = rng.box(-3.0, 3.0, -im_max, im_max);
    if (!clears_poles(s, margin)) continue;
    pts.push_back({phi, s});
  }
  return pts;
}

}  // namespace overalg
