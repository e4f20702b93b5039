#pragma once

#include <vector>

#include "overalg/types.hpp"

namespace overalg {

// Weight parameter of the analytic model; every formula needs value > 1.
class Alpha {
 public:
  explicit Alpha(double v);
  double value() const { return v_; }
  friend bool operator==(Alpha x, Alpha y) { return x.v_ == y.v_; }

 private:
  double v_;
};

// k! / (alpha)_k, the squared norm of the monomial z^k.
double taylor_weight(double alpha, int k);

// Finitely supported Taylor coefficients c_{kl} of a function holomorphic in z
// and antiholomorphic in u on the product of two unit disks:
// f(z, ubar) = sum c_{kl} z^k ubar^l.
class CoefMatrix {
 public:
  CoefMatrix(Alpha alpha, int max_k, int max_l);
  static CoefMatrix monomial(Alpha alpha, int k, int l, Complex coef = 1.0);

  Alpha alpha() const { return alpha_; }
  int max_k() const { return max_k_; }
  int max_l() const { return max_l_; }

  // Reads return 0 outside the stored rectangle.
  Complex at(int k, int l) const;
  void set(int k, int l, Complex v);

  CoefMatrix& operator+=(const CoefMatrix& o);
  CoefMatrix& operator-=(const CoefMatrix& o);
  CoefMatrix& operator*=(Complex scalar);
  friend CoefMatrix operator+(CoefMatrix a, const CoefMatrix& b) { return a += b; }
  friend CoefMatrix operator-(CoefMatrix a, const CoefMatrix& b) { return a -= b; }
  friend CoefMatrix operator*(Complex s, CoefMatrix a) { return a *= s; }

  double max_abs() const;

 private:
  Alpha alpha_;
  int max_k_, max_l_;
  std::vector<Complex> c_;  // row-major in k
};

// Group element (a, b; conj b, conj a) with |a|^2 - |b|^2 = 1.
struct GroupElement {
  Complex a, b;
  GroupElement(Complex a_, Complex b_);
  static GroupElement identity() { return GroupElement(1.0, 0.0); }
  GroupElement operator*(const GroupElement& o) const;
};

// The twelve first-order operators on the model: single-variable ladder
// operators in z and in u, and their diagonal sums/differences.
enum class AlgebraOp { L0z, L1z, Lm1z, L0u, L1u, Lm1u, L0, L1, Lm1, M0, M1, Mm1 };

const char* to_string(AlgebraOp op);

// sum c_{kl} conj(c'_{kl}) * [k!/(alpha)_k] * [l!/(alpha)_l]
Complex inner_product(const CoefMatrix& f, const CoefMatrix& g);
double norm_sq(const CoefMatrix& f);

CoefMatrix apply_algebra(AlgebraOp op, const CoefMatrix& f);

struct GroupActionResult {
  CoefMatrix mat;
  // Norm estimate of the dropped tail, from the outermost retained band.
  double tail_norm_estimate;
};

// Weighted substitution action of g on f, expanded as a Taylor series and
// truncated to degree trunc in each variable. The retained coefficients are
// exact; only the tail beyond trunc is dropped.
GroupActionResult apply_group(const GroupElement& g, const CoefMatrix& f, int trunc);

// Pointwise evaluation sum c_{kl} z^k w^l (w stands for the ubar slot).
Complex eval_poly(const CoefMatrix& f, Complex z, Complex w);

}  // namespace overalg
