// Test-side oracles, independent of the library's evaluation paths: direct
// series summation, adaptive Simpson quadrature, and naive prefix sums.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracles {

/// Direct summation of sum_{i=k}^{M} r^i/(i+1) (plain forward loop).
inline double phi_partial_sum(int k, double r, long m) {
  double sum = 0.0;
  double p = std::pow(r, k);
  for (long i = k; i <= m; ++i) {
    sum += p / static_cast<double>(i + 1);
    p *= r;
  }
  return sum;
}

/// Smallest M >= k with the geometric tail bound r^{M+1}/((M+2)(1-r)) below cut.
inline long phi_tail_cutoff(int k, double r, double cut) {
  long m = k;
  double p = std::pow(r, m + 1);
  while (p / ((m + 2) * (1.0 - r)) >= cut) {
    p *= r;
    ++m;
  }
  return m;
}

/// phi_k(r) by direct summation until the tail bound drops below cut.
inline double phi_series(int k, double r, double cut = 1e-15) {
  if (r == 0.0) return k == 0 ? 1.0 : 0.0;
  return phi_partial_sum(k, r, phi_tail_cutoff(k, r, cut));
}

/// Adaptive Simpson quadrature (independent of the library's Gauss-Kronrod).
namespace detail {
template <typename F, typename V>
V simpson_rec(const F& f, double a, double b, V fa, V fm, V fb, V whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const V flm = f(lm);
  const V frm = f(rm);
  const V left = (b - a) / 12.0 * (fa + 4.0 * flm + fm);
  const V right = (b - a) / 12.0 * (fm + 4.0 * frm + fb);
  const V delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || depth > 48) return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}
}  // namespace detail

template <typename F>
auto simpson(const F& f, double a, double b, double tol = 1e-12) {
  const auto fa = f(a);
  const auto fm = f(0.5 * (a + b));
  const auto fb = f(b);
  const auto whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0);
}

/// Naive independent prefix-sum Cesaro coefficients.
inline std::vector<std::complex<double>> prefix_cesaro(
    const std::vector<std::complex<double>>& a) {
  std::vector<std::complex<double>> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    std::complex<double> s{0.0, 0.0};
    for (std::size_t k = 0; k <= n; ++k) s += a[k];
    out[n] = s / static_cast<double>(n + 1);
  }
  return out;
}

/// Horner evaluation of a finite coefficient sequence at z.
inline std::complex<double> poly_eval(const std::vector<std::complex<double>>& coeffs,
                                      std::complex<double> z) {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace oracles
