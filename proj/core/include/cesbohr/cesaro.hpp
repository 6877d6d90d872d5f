// Cesaro operator Cf(z) = sum_n [ (a_0+...+a_n)/(n+1) ] z^n = int_0^1 f(tz)/(1-tz) dt
// on finite coefficient sequences, the Bohr sum, and the two inequality sides.
#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <vector>

#include "cesbohr/specfun.hpp"

namespace cesbohr {

/// Finite Taylor coefficient sequence a_0..a_M with a sup-norm claim.
/// claimed_bound = 1 asserts membership of the unit ball; see screen_lemma2.
struct CoeffSeq {
  std::vector<std::complex<double>> coeffs;
  double claimed_bound = 1.0;
};

/// Coefficient-bound screen |a_n| <= 1 - |a_0|^2 (n >= 1). Only meaningful for
/// sequences claiming bound 1; a violation means the claim cannot hold, and
/// the sequence is evaluated but flagged as not certified in the unit ball.
struct Lemma2Screen {
  std::vector<std::size_t> violations;
  bool certified = false;
};
Lemma2Screen screen_lemma2(const CoeffSeq& f, double slack = 1e-12);

/// Truncated series value with a rigorous geometric tail bound.
struct CesaroValue {
  std::complex<double> value;
  double truncation_error = 0.0;
};

struct BoundedReal {
  double value;
  double error_bound;
};

/// Raised when the 1e5-term truncation cap cannot meet the requested tolerance.
class TruncationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cesaro coefficients c_n = (a_0 + ... + a_n)/(n+1), same length as the input.
CoeffSeq cesaro_coeffs(const CoeffSeq& f);

/// Derivative coefficients b_n = (n+1) a_{n+1}; claimed_bound is replaced by a
/// valid bound on the derivative's Cesaro coefficients (max partial-sum modulus).
CoeffSeq derivative_coeffs(const CoeffSeq& f);

/// Taylor coefficients a_0..a_{count-1} of f_a(z) = (a+z)/(1+az).
CoeffSeq moebius_coeffs(const MoebiusWitness& a, std::size_t count);

/**
 * Truncated evaluation of Cf(z) for |z| <= r_bound < 1.
 *
 * The truncation length M is the smallest one with
 * claimed_bound * r_bound^{M+1}/(1-r_bound) <= tol/2 (valid because every
 * Cesaro coefficient is bounded by the sup norm), capped at 1e5 terms.
 */
CesaroValue cesaro_eval_series(const CoeffSeq& f, std::complex<double> z, Radius r_bound,
                               double tol = 1e-12);

/// Cf(z) by adaptive quadrature of int_0^1 f(tz)/(1-tz) dt, where f_along(t) = f(tz).
/// Throws QuadratureError if the integral fails to converge.
std::complex<double> cesaro_eval_integral(const std::function<std::complex<double>(double)>& f_along,
                                          std::complex<double> z, double tol = 1e-12);

/// Bohr sum sum_k |a_k| phi_k(r) over the finite sequence.
double bohr_sum(const CoeffSeq& f, Radius r);

/// (1/r^m) log(1/(1-r^m)); m = 1 is the right side of the main inequality.
double rhs_majorant(Radius r, int m);
double rhs_majorant(double r, int m);

/// |C f_a(r)| + |C f_a'(r)| phi_1(r) + sum_{k>=2}|a_k| phi_k(r), exact on the
/// extremal family via the specfun closed forms.
double theorem1_lhs(const MoebiusWitness& a, Radius r);

/// Same left side for an arbitrary finite sequence, via series evaluation with
/// tracked truncation error; Cf' uses the derivative coefficient sequence.
BoundedReal theorem1_lhs_general(const CoeffSeq& f, Radius r, double tol = 1e-12);

/// |C f_a(r^m)| + |C f_a'(r^m)| phi_1(r^m) + sum_{k>=2}|a_k| phi_k(r), the left
/// side with the Schwarz composition w(z) = z^m; m = 1 reduces to theorem1_lhs.
double theorem2_lhs(const MoebiusWitness& a, int m, Radius r);

/// |C f(r)| + sum_{k>=N} |a_k| phi_k(r) with tracked truncation error.
BoundedReal bohr_rogosinski_lhs(const CoeffSeq& f, int N, Radius r, double tol = 1e-12);

/// One coefficient per line, columns "re,im" (a lone real column is accepted).
CoeffSeq load_coeffs_csv(std::istream& in);
CoeffSeq load_coeffs_csv_file(const std::string& path);
void write_coeffs_csv(const CoeffSeq& f, std::ostream& out);

}  // namespace cesbohr
