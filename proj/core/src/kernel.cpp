#include "overalg/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "overalg/parallel.hpp"
#include "overalg/quadrature.hpp"
#include "overalg/special.hpp"

namespace overalg {

namespace {

constexpr double pi = std::numbers::pi;

// In-place radix-2 FFT, length a power of two. inverse includes the 1/N.
void fft_pow2(std::vector<Complex>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * pi / static_cast<double>(len);
    const Complex wl = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      Complex w = 1.0;
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex x = a[i + k], y = a[i + k + len / 2] * w;
        a[i + k] = x + y;
        a[i + k + len / 2] = x - y;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& v : a) v /= static_cast<double>(n);
}

}  // namespace

Complex kernel_eval(double phi, Complex s, Complex z, Complex u, Alpha alpha) {
  if (!(std::abs(z) < 1.0) || !(std::abs(u) < 1.0))
    throw std::domain_error("kernel_eval: arguments must lie strictly inside the unit disk");
  const Complex eip = std::exp(I * phi);
  const Complex b1 = 1.0 - std::conj(z) * eip;
  const Complex b2 = 1.0 - u / eip;
  const Complex b3 = 1.0 - std::conj(z) * u;
  // Each base is 1 minus a number of modulus < 1; a nonpositive real part
  // would mean the principal branch is no longer safe.
  if (!(b1.real() > 0.0) || !(b2.real() > 0.0) || !(b3.real() > 0.0))
    throw std::logic_error("kernel_eval: power base left the right half-plane");
  const Complex beta = 0.5 + I * s;
  const Complex gamma = Complex(alpha.value(), 0.0) - beta;  // alpha - 1/2 - is
  return std::exp(-beta * (std::log(b1) + std::log(b2)) - gamma * std::log(b3));
}

Complex kernel_coeff_A(int k, int l, Complex s, Alpha alpha) {
  if (k < 0 || l < 0) throw std::invalid_argument("kernel_coeff_A: negative index");
  const Complex beta = 0.5 + I * s;
  const Complex gamma = Complex(alpha.value(), 0.0) - beta;
  const int kl_max = std::max(k, l), m_max = std::min(k, l);
  // ph[j] = (1/2+is)_j / j!,  q[m] = (alpha-1/2-is)_m / m!
  std::vector<Complex> ph(static_cast<std::size_t>(kl_max) + 1);
  ph[0] = 1.0;
  for (int j = 1; j <= kl_max; ++j)
    ph[j] = ph[j - 1] * (beta + static_cast<double>(j - 1)) / static_cast<double>(j);
  Complex acc{}, qm = 1.0;
  for (int m = 0; m <= m_max; ++m) {
    if (m > 0) qm *= (gamma + static_cast<double>(m - 1)) / static_cast<double>(m);
    acc += qm * ph[k - m] * ph[l - m];
  }
  return acc;
}

Complex kernel_coeff(int k, int l, double phi, Complex s, Alpha alpha) {
  return std::exp(I * (static_cast<double>(k - l) * phi)) * kernel_coeff_A(k, l, s, alpha);
}

void SpectralFunction::add_term(int mode, std::function<Complex(Complex)> radial) {
  terms_.push_back(Term{mode, std::move(radial)});
}

Complex SpectralFunction::eval(double phi, Complex s) const {
  Complex acc{};
  for (const auto& t : terms_)
    acc += std::exp(I * (static_cast<double>(t.mode) * phi)) * t.radial(s);
  return acc;
}

Complex SpectralFunction::mode_eval(int mode, Complex s) const {
  Complex acc{};
  for (const auto& t : terms_)
    if (t.mode == mode) acc += t.radial(s);
  return acc;
}

std::vector<int> SpectralFunction::modes() const {
  std::vector<int> m;
  for (const auto& t : terms_) m.push_back(t.mode);
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

SpectralFunction& SpectralFunction::operator+=(const SpectralFunction& o) {
  if (!(alpha_ == o.alpha_)) throw std::invalid_argument("SpectralFunction: alpha mismatch");
  for (const auto& t : o.terms_) terms_.push_back(t);
  return *this;
}

SpectralFunction& SpectralFunction::operator*=(Complex scalar) {
  for (auto& t : terms_) {
    auto inner = std::move(t.radial);
    t.radial = [scalar, inner](Complex s) { return scalar * inner(s); };
  }
  return *this;
}

namespace {

// Radial part of one Fourier mode of a transformed coefficient matrix:
// sum over entries (k, l, d) of d * A_{kl}(s).
struct ModeRadial {
  double alpha;
  std::vector<std::tuple<int, int, Complex>> entries;

  Complex operator()(Complex s) const {
    Alpha a(alpha);
    Complex acc{};
    for (const auto& [k, l, d] : entries) acc += d * kernel_coeff_A(k, l, s, a);
    return acc;
  }
};

}  // namespace

SpectralFunction transform(const CoefMatrix& f) {
  const double alpha = f.alpha().value();
  const double plane = pi / (alpha - 1.0);
  SpectralFunction F(f.alpha());
  for (int m = -f.max_l(); m <= f.max_k(); ++m) {
    ModeRadial radial{alpha, {}};
    for (int k = std::max(0, m); k <= f.max_k(); ++k) {
      int l = k - m;
      if (l > f.max_l()) continue;
      Complex c = f.at(k, l);
      if (c == Complex{}) continue;
      Complex d = c * plane * plane * taylor_weight(alpha, k) * taylor_weight(alpha, l);
      radial.entries.emplace_back(k, l, d);
    }
    if (!radial.entries.empty()) F.add_term(m, std::move(radial));
  }
  return F;
}

Complex quadrature_transform(const CoefMatrix& f, double phi, Complex s, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature_transform: tol must be positive");
  const double alpha = f.alpha().value();
  const Complex beta = 0.5 + I * s;
  const Complex gamma = Complex(alpha, 0.0) - beta;

  // Support of f: coefficients, their modes k-l, and the largest degrees.
  std::vector<std::tuple<int, int, Complex>> coefs;
  std::vector<int> modes;
  for (int k = 0; k <= f.max_k(); ++k)
    for (int l = 0; l <= f.max_l(); ++l)
      if (f.at(k, l) != Complex{}) {
        coefs.emplace_back(k, l, f.at(k, l));
        modes.push_back(k - l);
      }
  if (coefs.empty()) return Complex{};
  std::sort(modes.begin(), modes.end());
  modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
  const int maxdeg = std::max(f.max_k(), f.max_l());

  // Radial rule with the boundary weight (1-t)^(alpha-2) built in; its order
  // only has to integrate the exact angular limit, a polynomial of degree
  // maxdeg in each t. Keeping it small also keeps the largest node away from
  // t = 1, which controls the angular aliasing error below.
  const int nr = std::max(5, (maxdeg + 3) / 2 + 1);
  const QuadratureRule radial = gauss_jacobi01(nr, alpha);
  const std::size_t npairs = radial.nodes.size() * radial.nodes.size();

  const Complex eip = std::exp(I * phi);

  Complex prev{};
  bool have_prev = false;
  for (int N = 256; N <= 8192; N *= 2) {
    // e^{2 pi i j / N} table; all angular phases are exact powers of it.
    std::vector<Complex> E(N);
    for (int j = 0; j < N; ++j) E[j] = std::exp(I * (2.0 * pi * j / N));
    const int mask = N - 1;

    std::vector<Complex> pair_sums(npairs);
    parallel_for(npairs, [&](std::size_t pidx) {
      const int i1 = static_cast<int>(pidx) / radial.order;
      const int i2 = static_cast<int>(pidx) % radial.order;
      const double t1 = radial.nodes[i1], t2 = radial.nodes[i2];
      const double r1 = std::sqrt(t1), r2 = std::sqrt(t2);

      std::vector<Complex> A(N), B(N), C(N);
      for (int j = 0; j < N; ++j) {
        A[j] = std::exp(-beta * std::log(1.0 - r1 * eip * std::conj(E[j])));
        B[j] = std::exp(-beta * std::log(1.0 - r2 * E[j] / eip));
        C[j] = std::exp(-gamma * std::log(1.0 - r1 * r2 * E[j]));
      }

      // Angular double sum, organized through the difference angle d:
      //   sum_{j,m} e^{i k th_j - i l th_m} A_j B_m C_{m-j}
      //     = sum_d C_d e^{-i l th_d} sum_j A_j B_{j+d} e^{i (k-l) th_j}.
      // The inner sum over j is a cyclic correlation of x_j = A_j e^{i mu th_j}
      // with B, so it comes out of three FFTs per mode.
      std::vector<Complex> bhat(B);
      fft_pow2(bhat, false);
      std::vector<std::vector<Complex>> inner(modes.size());
      for (std::size_t mi = 0; mi < modes.size(); ++mi) {
        const int mu = modes[mi];
        std::vector<Complex> x(N);
        for (int j = 0; j < N; ++j) {
          int idx = static_cast<int>((static_cast<long long>(mu) * j) % N);
          if (idx < 0) idx += N;
          x[j] = A[j] * E[idx];
        }
        fft_pow2(x, false);
        std::vector<Complex> zf(N);
        for (int k2 = 0; k2 < N; ++k2) zf[k2] = bhat[k2] * x[(N - k2) & mask];
        fft_pow2(zf, true);
        inner[mi] = std::move(zf);
      }

      Complex pair_acc{};
      for (const auto& [k, l, c] : coefs) {
        const std::size_t mi =
            std::lower_bound(modes.begin(), modes.end(), k - l) - modes.begin();
        Complex S{};
        for (int d = 0; d < N; ++d) {
          int idx = static_cast<int>((static_cast<long long>(l) * d) % N);
          S += C[d] * std::conj(E[idx]) * inner[mi][d];
        }
        pair_acc += c * std::pow(r1, k) * std::pow(r2, l) * S;
      }
      pair_sums[pidx] = radial.weights[i1] * radial.weights[i2] * pair_acc;
    });

    Complex total{};
    for (const auto& v : pair_sums) total += v;  // fixed order, thread-count independent
    total *= 0.25 * (2.0 * pi / N) * (2.0 * pi / N);

    if (have_prev && std::abs(total - prev) <= tol * std::max(1.0, std::abs(total)))
      return total;
    prev = total;
    have_prev = true;
  }
  throw convergence_error(
      "quadrature_transform: refinement cap reached (alpha too close to 1 for this rule)");
}

double plancherel_weight(double s, Alpha alpha) {
  if (s < 0.0) throw std::domain_error("plancherel_weight: s must be >= 0");
  if (s == 0.0) return 0.0;
  const double a = alpha.value();
  double lg = log_gamma(Complex(a - 0.5, s)).real() - std::lgamma(a);
  return std::exp(2.0 * lg) * s * std::tanh(pi * s);
}

double plancherel_weight_gamma_form(double s, Alpha alpha) {
  if (s < 0.0) throw std::domain_error("plancherel_weight_gamma_form: s must be >= 0");
  if (s == 0.0) return 0.0;
  const double a = alpha.value();
  double re = log_gamma(Complex(a - 0.5, s)).real() + log_gamma(Complex(0.5, s)).real() -
              std::lgamma(a) - log_gamma(Complex(0.0, s)).real();
  return std::exp(2.0 * re);
}

namespace {

// Composite Gauss panels of unit length on [0, s_max], with the panel order
// doubled until the total stabilizes. Panels are integrated into per-panel
// slots and reduced in index order, so the result does not depend on the
// thread count.
template <class F>
auto integrate_spectral(F&& f, double s_max, double tol, double* residual)
    -> decltype(f(0.0)) {
  using R = decltype(f(0.0));
  const int npanels = static_cast<int>(std::ceil(s_max));
  R prev{};
  bool have_prev = false;
  for (int order = 16; order <= 256; order *= 2) {
    std::vector<R> panel(npanels);
    parallel_for(static_cast<std::size_t>(npanels), [&](std::size_t p) {
      double a = static_cast<double>(p);
      double b = std::min(a + 1.0, s_max);
      if (a >= b) {
        panel[p] = R{};
        return;
      }
      panel[p] = integrate(gauss_legendre(order, a, b), f);
    });
    R total{};
    double mass = 0.0;  // convergence scale that survives cancellation
    for (const auto& v : panel) {
      total += v;
      mass += std::abs(v);
    }
    if (have_prev) {
      double diff = std::abs(total - prev);
      double scale = std::max({std::abs(total), mass, 1e-300});
      if (diff <= tol * scale) {
        if (residual) *residual = diff / scale;
        return total;
      }
    }
    prev = total;
    have_prev = true;
  }
  throw convergence_error("integrate_spectral: panel order cap reached");
}

}  // namespace

ParsevalResult parseval_check(const CoefMatrix& f, double s_max, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("parseval_check: tol must be positive");
  const double nf = norm_sq(f);
  if (nf == 0.0) return ParsevalResult{0.0, 0.0, 0.0, 0.0};

  const SpectralFunction F = transform(f);
  const std::vector<int> modes = F.modes();
  Alpha alpha = f.alpha();

  auto energy = [&](double s) {
    double acc = 0.0;
    for (int m : modes) acc += std::norm(F.mode_eval(m, Complex(s, 0.0)));
    return acc;
  };
  auto integrand = [&](double s) { return energy(s) * plancherel_weight(s, alpha); };

  // The density decays like e^{-pi s} times a polynomial, so the tail beyond
  // s_max is below roughly integrand(s_max) * 2/pi once s_max clears the
  // polynomial growth. The cutoff is pushed out until that bound is negligible
  // against tol; an explicit cutoff that fails the bound is an error.
  const double tail_target = 0.05 * tol * nf;
  double cutoff = s_max;
  if (cutoff <= 0.0) {
    cutoff = 12.0;
    while (integrand(cutoff) * 2.0 > tail_target && cutoff < 80.0) cutoff += 4.0;
    if (integrand(cutoff) * 2.0 > tail_target)
      throw convergence_error("parseval_check: automatic cutoff search failed");
  } else if (integrand(cutoff) * 2.0 > tail_target) {
    throw convergence_error("parseval_check: spectral tail above tolerance at s_max");
  }

  double residual = 0.0;
  double integral = 2.0 * pi * integrate_spectral(integrand, cutoff, tol, &residual);
  return ParsevalResult{integral / nf, residual, integral, cutoff};
}

Complex spectral_pairing(const CoefMatrix& f, const CoefMatrix& g, double s_max, double tol) {
  if (!(f.alpha() == g.alpha())) throw std::invalid_argument("spectral_pairing: alpha mismatch");
  if (!(tol > 0.0)) throw std::invalid_argument("spectral_pairing: tol must be positive");
  const SpectralFunction F = transform(f), G = transform(g);
  Alpha alpha = f.alpha();

  std::vector<int> modes = F.modes();
  {
    std::vector<int> gm = G.modes();
    modes.insert(modes.end(), gm.begin(), gm.end());
    std::sort(modes.begin(), modes.end());
    modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
  }

  auto integrand = [&](double s) {
    Complex acc{};
    for (int m : modes)
      acc += F.mode_eval(m, Complex(s, 0.0)) * std::conj(G.mode_eval(m, Complex(s, 0.0)));
    return acc * plancherel_weight(s, alpha);
  };

  double cutoff = s_max;
  if (cutoff <= 0.0) {
    const double scale = std::sqrt(norm_sq(f) * norm_sq(g));
    const double tail_target = 0.05 * tol * std::max(scale, 1e-300);
    cutoff = 12.0;
    while (std::abs(integrand(cutoff)) * 2.0 > tail_target && cutoff < 80.0) cutoff += 4.0;
  }
  return 2.0 * pi * integrate_spectral(integrand, cutoff, tol, nullptr);
}

double reflection_defect(const CoefMatrix& f, double s_max, int grid_points) {
  const SpectralFunction F = transform(f);
  const std::vector<int> modes = F.modes();
  double max_e = 0.0, max_diff = 0.0;
  for (int i = 1; i <= grid_points; ++i) {
    double s = s_max * i / grid_points;
    double ep = 0.0, em = 0.0;
    for (int m : modes) {
      ep += std::norm(F.mode_eval(m, Complex(s, 0.0)));
      em += std::norm(F.mode_eval(m, Complex(-s, 0.0)));
    }
    max_e = std::max({max_e, ep, em});
    max_diff = std::max(max_diff, std::abs(ep - em));
  }
  return max_e > 0.0 ? max_diff / max_e : 0.0;
}

}  // namespace overalg
