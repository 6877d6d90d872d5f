// Exact rational polynomial arithmetic and Sturm-chain real root counting.
// All arithmetic is over GMP rationals; no rounding anywhere in this module.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cesbohr::sturm {

using Rational = mpq_class;

class ZeroPolynomialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial with exact rational coefficients, stored ascending by degree.
/// The zero polynomial has an empty coefficient vector (degree -1).
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> ascending_coeffs);

  /// Whitespace-separated coefficient list "c0 c1 ... cn"; entries may be
  /// fractions like "-11/3".
  static RationalPoly from_coeff_list(std::string_view text);

  /// Human-readable form like "39 - 45r - 7r^2 + 43r^3"; any single-letter
  /// variable is accepted.
  static RationalPoly parse(std::string_view text);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const;

  RationalPoly derivative() const;
  Rational eval(const Rational& x) const;  // exact Horner
  std::string to_string(char var = 'r') const;

  RationalPoly operator-() const;
  friend RationalPoly operator*(const Rational& c, const RationalPoly& p);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  std::vector<Rational> coeffs_;
  void normalize();
};

/// Euclidean division: returns the remainder of num by den (den nonzero).
RationalPoly poly_rem(const RationalPoly& num, const RationalPoly& den);

/// Monic polynomial gcd.
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);

/// Canonical Sturm chain: square-free part p/gcd(p,p'), its derivative, then
/// negated Euclidean remainders down to a nonzero constant.
struct SturmChain {
  std::vector<RationalPoly> polys;
};
SturmChain chain(const RationalPoly& p);

/// Sign variations of the chain at x, zeros dropped. With that convention the
/// count is right-continuous, so variation differences count roots in (a, b]
/// even when an endpoint is itself a root.
int sign_variations(const SturmChain& c, const Rational& x);

/// Number of distinct real roots of p in the half-open interval (a, b].
int count_roots(const RationalPoly& p, const Rational& a, const Rational& b);

inline Rational eval_exact(const RationalPoly& p, const Rational& x) { return p.eval(x); }

}  // namespace cesbohr::sturm
