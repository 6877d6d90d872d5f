// Weight functions phi_k attached to the Cesaro-Bohr sum, their tail sums,
// and closed forms for the extremal Moebius family f_a(z) = (a+z)/(1+az).
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace cesbohr {

/// A point of the open unit interval [0,1) where the power series live.
class Radius {
 public:
  explicit Radius(double r) : r_(r) {
    if (!(r >= 0.0 && r < 1.0))
      throw std::domain_error("Radius: need 0 <= r < 1, got " + std::to_string(r));
  }
  double value() const { return r_; }

 private:
  double r_;
};

/// Parameter a in [0,1] of the extremal function f_a(z) = (a+z)/(1+az).
/// Its Taylor coefficients are a_0 = a, a_k = (1-a^2)(-a)^{k-1} for k >= 1.
class MoebiusWitness {
 public:
  explicit MoebiusWitness(double a) : a_(a) {
    if (!(a >= 0.0 && a <= 1.0))
      throw std::domain_error("MoebiusWitness: need 0 <= a <= 1, got " + std::to_string(a));
  }
  double value() const { return a_; }

 private:
  double a_;
};

struct PhiValue {
  int k;
  double r;
  double value;
};

/**
 * phi_k(r) = sum_{i>=k} r^i/(i+1) = (1/r) * integral_0^r x^k/(1-x) dx.
 *
 * Evaluated by the closed form (1/r)(-log(1-r) - sum_{j=1}^k r^j/j), with a
 * direct series fallback near r=0 and wherever the closed form would cancel
 * catastrophically (large k, moderate r). phi_0(0) = 1, phi_k(0) = 0 for k>=1.
 * Absolute error <= 1e-13 against the defining series.
 */
double phi(int k, double r);
inline double phi(int k, Radius r) { return phi(k, r.value()); }
PhiValue phi_value(int k, Radius r);

/**
 * sum_{k>=2} phi_k(r) = (1/r) * integral_0^r x^2/(1-x)^2 dx
 *                     = r^2/(1-r) + r + 2 + (2/r) log(1-r).
 * Series fallback sum_{j>=2} (j-1) r^j/(j+1) below r = 1e-3. Nonnegative.
 */
double phi_tail_from2(double r);
inline double phi_tail_from2(Radius r) { return phi_tail_from2(r.value()); }

/// sum_{k>=2} |a_k| phi_k(r) for f_a, by the closed form
/// a(1+a) phi_2(r) - (1+a) phi_2(ar).
double extremal_coeff_tail(const MoebiusWitness& a, Radius r);

/// |C f_a(r)| = (1/r) log(1/(1-r)) - ((1-a)/(ar)) log(1+ar), for r in (0,1).
/// The a -> 0 limit of the second term, (1-a) log(1+ar)/(ar) -> 1, is built in.
double extremal_cesaro_abs(const MoebiusWitness& a, Radius r);

/**
 * |C f_a'(r)| = integral_0^1 (1-a^2)/((1-tr)(1+atr)^2) dt
 *             = ((1-a)/(1+a)) [ -log(1-r)/r + log(1+ar)/r + a(1+a)/(1+ar) ],
 * the partial-fraction evaluation of the integral, for r in (0,1).
 */
double extremal_cesaro_deriv_abs(const MoebiusWitness& a, Radius r);

namespace detail {

/// log(1+x)/x with the removable singularity at x = 0 filled in.
double log1p_over(double x);

/// -log(1-r), accurate for tiny r via log1p.
inline double neg_log1m(double r) { return -std::log1p(-r); }

/// 1 - r^m without cancellation, r in (0,1).
double one_minus_pow(double r, int m);

/// log(1 - r^m), accurate both for r^m near 0 (log1p) and near 1 (expm1).
double log_one_minus_pow(double r, int m);

/// Direct summation of sum_{i>=k} r^i/(i+1) with a geometric tail cutoff.
double phi_series(int k, double r);

}  // namespace detail

}  // namespace cesbohr
