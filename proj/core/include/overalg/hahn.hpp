#pragma once

#include <vector>

#include "overalg/kernel.hpp"
#include "overalg/model.hpp"
#include "overalg/types.hpp"

namespace overalg {

struct CdhParams {
  double a, b, c;
};

// Continuous dual Hahn polynomial in the normalization
//   S_n(s^2; a, b, c) / ((a+b)_n (a+c)_n) = 3F2(-n, a+is, a-is; a+b, a+c; 1),
// evaluated as the terminating series.
Complex cdh_eval(int n, const CdhParams& p, Complex s);

// Same value through the three-term recurrence in n.
Complex cdh_eval_recurrence(int n, const CdhParams& p, Complex s);

// Transform of the diagonal monomial (z ubar)^k; a single mode-0 term.
SpectralFunction diag_eigenfunction(int k, Alpha alpha);

// Max residual of Q0 G_k = (2k + alpha) G_k over the given real s points,
// with G_k = diag_eigenfunction(k).
double q0_eigen_residual(int k, Alpha alpha, const std::vector<double>& points);

struct CdhCandidate {
  CdhParams params;
  double max_residual;      // worst eigen-relation residual over degrees and probe grid
  double fitted_slope;      // affine eigenvalue law lambda_n ~ slope * n + intercept
  double fitted_intercept;
};

struct CdhMatchReport {
  double alpha;
  std::vector<CdhCandidate> candidates;  // sorted, best match first
};

// Tries parameter triples built from {1/2, alpha - 1/2} against the mode-0
// shift operator: each candidate family is wrapped as mode-0 spectral data,
// the operator is applied, and an affine-in-degree eigenvalue law is fitted.
// The candidate whose residual vanishes identifies the diagonal transforms.
CdhMatchReport cdh_match_report(Alpha alpha, int max_degree, int grid_points = 200);

}  // namespace overalg
