#include "overalg/hahn.hpp"

#include <algorithm>
#include <cmath>

#include "overalg/spectral_ops.hpp"

namespace overalg {

Complex cdh_eval(int n, const CdhParams& p, Complex s) {
  if (n < 0) throw std::invalid_argument("cdh_eval: degree must be >= 0");
  const Complex ais = p.a + I * s, ams = p.a - I * s;
  Complex term = 1.0, acc = 1.0;
  for (int j = 0; j < n; ++j) {
    const double d1 = p.a + p.b + j, d2 = p.a + p.c + j;
    if (d1 == 0.0 || d2 == 0.0)
      throw std::domain_error("cdh_eval: degenerate lower parameters");
    term *= (static_cast<double>(-n + j)) * (ais + static_cast<double>(j)) *
            (ams + static_cast<double>(j)) / (d1 * d2 * (j + 1.0));
    acc += term;
  }
  return acc;
}

Complex cdh_eval_recurrence(int n, const CdhParams& p, Complex s) {
  if (n < 0) throw std::invalid_argument("cdh_eval_recurrence: degree must be >= 0");
  const Complex x2 = p.a * p.a + s * s;  // (a+is)(a-is)
  Complex prev = 1.0;
  if (n == 0) return prev;
  const double d0 = (p.a + p.b) * (p.a + p.c);
  if (d0 == 0.0) throw std::domain_error("cdh_eval_recurrence: degenerate lower parameters");
  Complex cur = 1.0 - x2 / d0;
  for (int k = 1; k < n; ++k) {
    const double A = (k + p.a + p.b) * (k + p.a + p.c);
    const double C = k * (k + p.b + p.c - 1.0);
    if (A == 0.0) throw std::domain_error("cdh_eval_recurrence: degenerate lower parameters");
    Complex next = ((A + C - x2) * cur - C * prev) / A;
    prev = cur;
    cur = next;
  }
  return cur;
}

SpectralFunction diag_eigenfunction(int k, Alpha alpha) {
  return transform(CoefMatrix::monomial(alpha, k, k));
}

double q0_eigen_residual(int k, Alpha alpha, const std::vector<double>& points) {
  const SpectralFunction G = diag_eigenfunction(k, alpha);
  const SpectralFunction QG = apply_spectral(SpectralOp::Q0, G);
  double worst = 0.0;
  for (double sv : points) {
    const Complex s(sv, 0.0);
    const Complex want = (2.0 * k + alpha.value()) * G.mode_eval(0, s);
    const Complex got = QG.mode_eval(0, s);
    worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
  }
  return worst;
}

CdhMatchReport cdh_match_report(Alpha alpha, int max_degree, int grid_points) {
  if (max_degree < 1) throw std::invalid_argument("cdh_match_report: max_degree must be >= 1");
  if (grid_points < 2) throw std::invalid_argument("cdh_match_report: grid_points must be >= 2");
  const double av = alpha.value();
  const double vals[2] = {0.5, av - 0.5};

  std::vector<CdhParams> candidates;
  for (double a : vals)
    for (int bi = 0; bi < 2; ++bi)
      for (int ci = bi; ci < 2; ++ci)  // {b, c} as a multiset
        candidates.push_back({a, vals[bi], vals[ci]});

  // Probe grid on the real axis, clear of the pole set.
  std::vector<double> grid(grid_points);
  for (int j = 0; j < grid_points; ++j)
    grid[j] = 0.3 + (6.0 - 0.3) * j / (grid_points - 1.0);

  CdhMatchReport report{av, {}};
  for (const auto& p : candidates) {
    // lambda_n: projection of the operator image onto the candidate family,
    // robust against real zeros of the polynomials on the grid.
    std::vector<Complex> lambda(max_degree + 1);
    std::vector<std::vector<Complex>> rv(max_degree + 1), qv(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) {
      SpectralFunction Rn(alpha);
      Rn.add_term(0, [n, p](Complex s) { return cdh_eval(n, p, s); });
      const SpectralFunction QRn = apply_spectral(SpectralOp::Q0, Rn);
      rv[n].resize(grid_points);
      qv[n].resize(grid_points);
      Complex num{}, den{};
      for (int j = 0; j < grid_points; ++j) {
        rv[n][j] = cdh_eval(n, p, Complex(grid[j], 0.0));
        qv[n][j] = QRn.mode_eval(0, Complex(grid[j], 0.0));
        num += std::conj(rv[n][j]) * qv[n][j];
        den += std::norm(rv[n][j]);
      }
      lambda[n] = den != Complex{} ? num / den : Complex{};
    }

    // Affine fit of Re lambda_n over n; imaginary parts count as residual.
    double sx = 0, sxx = 0, sy = 0, sxy = 0;
    for (int n = 0; n <= max_degree; ++n) {
      sx += n;
      sxx += double(n) * n;
      sy += lambda[n].real();
      sxy += n * lambda[n].real();
    }
    const double npts = max_degree + 1.0;
    const double det = npts * sxx - sx * sx;
    const double slope = (npts * sxy - sx * sy) / det;
    const double intercept = (sy * sxx - sx * sxy) / det;

    double worst = 0.0;
    for (int n = 0; n <= max_degree; ++n) {
      const double lam = slope * n + intercept;
      for (int j = 0; j < grid_points; ++j) {
        const Complex want = lam * rv[n][j];
        worst = std::max(worst, std::abs(qv[n][j] - want) / std::max(1.0, std::abs(want)));
      }
    }
    report.candidates.push_back({p, worst, slope, intercept});
  }

  std::sort(report.candidates.begin(), report.candidates.end(),
            [](const CdhCandidate& x, const CdhCandidate& y) {
              return x.max_residual < y.max_residual;
            });
  return report;
}

}  // namespace overalg
