#include "cesbohr/specfun.hpp"

#include <cmath>
#include <limits>

namespace cesbohr {

namespace detail {

namespace {
// Below this radius the phi closed form subtracts nearly equal logs.
constexpr double kPhiSeriesThreshold = 1e-3;
// If the closed form cancels away more than six digits, fall back to the series.
constexpr double kCancellationGuard = 1e-6;
}  // namespace

double log1p_over(double x) {
  if (std::abs(x) < 1e-4) {
    // log(1+x)/x = 1 - x/2 + x^2/3 - x^3/4 + ...
    return 1.0 + x * (-0.5 + x * (1.0 / 3.0 + x * (-0.25 + x * 0.2)));
  }
  return std::log1p(x) / x;
}

double one_minus_pow(double r, int m) {
  if (m == 1) return 1.0 - r;
  return -std::expm1(static_cast<double>(m) * std::log(r));
}

double log_one_minus_pow(double r, int m) {
  const double s = m == 1 ? r : std::pow(r, m);
  if (s <= 0.5) return std::log1p(-s);
  return std::log(one_minus_pow(r, m));
}

double phi_series(int k, double r) {
  double p = std::pow(r, k);
  double sum = 0.0;
  const double one_minus_r = 1.0 - r;
  for (long i = k; i < k + 5'000'000L; ++i) {
    sum += p / static_cast<double>(i + 1);
    p *= r;
    // Tail after index i is at most r^{i+1} / ((i+2)(1-r)).
    if (p / (static_cast<double>(i + 2) * one_minus_r) < 1e-18 + 1e-16 * sum) return sum;
  }
  throw std::runtime_error("phi: series did not converge within the iteration cap");
}

}  // namespace detail

double phi(int k, double r) {
  if (k < 0) throw std::domain_error("phi: index k must be nonnegative");
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("phi: need 0 <= r < 1 (series diverges at r >= 1)");
  if (r == 0.0) return k == 0 ? 1.0 : 0.0;
  if (k == 0) return detail::neg_log1m(r) / r;
  if (r < detail::kPhiSeriesThreshold) return detail::phi_series(k, r);

  const double total = detail::neg_log1m(r);
  double partial = 0.0;
  double p = 1.0;
  for (int j = 1; j <= k; ++j) {
    p *= r;
    partial += p / static_cast<double>(j);
  }
  const double diff = total - partial;  // = sum_{j>k} r^j/j
  if (diff < detail::kCancellationGuard * total) return detail::phi_series(k, r);
  return diff / r;
}

PhiValue phi_value(int k, Radius r) { return PhiValue{k, r.value(), phi(k, r.value())}; }

double phi_tail_from2(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("phi_tail_from2: need 0 <= r < 1");
  if (r == 0.0) return 0.0;
  if (r < detail::kPhiSeriesThreshold) {
    // sum_{j>=2} (j-1) r^j/(j+1)
    double sum = 0.0;
    double p = r * r;
    for (int j = 2; j < 200; ++j) {
      sum += p * (static_cast<double>(j - 1) / static_cast<double>(j + 1));
      p *= r;
      if (p / (1.0 - r) < 1e-18 + 1e-16 * sum) break;
    }
    return sum;
  }
  return r * r / (1.0 - r) + r + 2.0 + 2.0 * std::log1p(-r) / r;
}

double extremal_coeff_tail(const MoebiusWitness& a, Radius r) {
  const double av = a.value();
  const double rv = r.value();
  return av * (1.0 + av) * phi(2, rv) - (1.0 + av) * phi(2, av * rv);
}

double extremal_cesaro_abs(const MoebiusWitness& a, Radius r) {
  const double rv = r.value();
  if (!(rv > 0.0)) throw std::domain_error("extremal_cesaro_abs: need 0 < r < 1");
  const double av = a.value();
  return detail::neg_log1m(rv) / rv - (1.0 - av) * detail::log1p_over(av * rv);
}

double extremal_cesaro_deriv_abs(const MoebiusWitness& a, Radius r) {
  const double rv = r.value();
  if (!(rv > 0.0)) throw std::domain_error("extremal_cesaro_deriv_abs: need 0 < r < 1");
  const double av = a.value();
  if (av == 1.0) return 0.0;
  const double bracket = detail::neg_log1m(rv) / rv + std::log1p(av * rv) / rv +
                         av * (1.0 + av) / (1.0 + av * rv);
  return (1.0 - av) / (1.0 + av) * bracket;
}

}  // namespace cesbohr
