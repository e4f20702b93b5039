#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "overalg/model.hpp"
#include "overalg/spectral_ops.hpp"
#include "overalg/types.hpp"

namespace overalg {

// Seeded generator with a fixed draw discipline, so every report can quote
// the seed and be replayed exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  Complex box(double re_lo, double re_hi, double im_lo, double im_hi);
  Complex disk(double radius);  // area-uniform on |z| <= radius

 private:
  std::mt19937_64 gen_;
};

// Dense random matrix with complex entries uniform in [-1,1]^2, covering all
// (k, l) with k, l <= degree.
CoefMatrix random_matrix(Rng& rng, Alpha alpha, int degree);

// Sample points with s real, uniform in [s_lo, s_hi], phi uniform in
// [0, 2 pi); draws with s closer than margin to {0, i/2, -i/2} are rejected.
std::vector<SamplePoint> real_sample_points(Rng& rng, int count, double s_lo, double s_hi,
                                            double margin);

// Sample points with Re s uniform in [-3, 3], |Im s| <= im_max, same
// rejection rule.
std::vector<SamplePoint> complex_sample_points(Rng& rng, int count, double im_max,
                                               double margin);

}  // namespace overalg
