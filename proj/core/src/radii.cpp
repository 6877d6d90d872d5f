#include "cesbohr/radii.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cesbohr/specfun.hpp"

namespace cesbohr::radii {

namespace {

using cesbohr::phi;
using cesbohr::phi_tail_from2;
using cesbohr::detail::neg_log1m;
using cesbohr::detail::one_minus_pow;

void require_open_unit(double r, const char* who) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error(std::string(who) + ": need 0 < r < 1, got " + std::to_string(r));
}

double theorem_a_residual(double r) {
  // 2r - 3(1-r) log(1/(1-r))
  return 2.0 * r - 3.0 * (1.0 - r) * neg_log1m(r);
}

// 2(-s - log(1-s)) - s(1 - s^2) in the substituted variable s = r^m.
double pick_bound_residual_in(double s, double one_minus_s_sq) {
  return s * (2.0 * phi(1, s) - one_minus_s_sq);
}

// Eq.-(r8) arrangement of phi(r).
double theorem1_phi_r8(double r) {
  const double lg1m = std::log1p(-r);  // log(1-r)
  const double lg1p = std::log1p(r);   // log(1+r)
  return -lg1p / r
         - 0.5 * (-lg1m / r + lg1p / r + 2.0 / (1.0 + r))
         + 2.0 * (r * r / (1.0 - r) + r + 2.0)
         + (lg1m / r) * (4.0 + lg1m / (2.0 * r) - lg1p / (2.0 * r) - 1.0 / (1.0 + r));
}

double pow_int(double r, int m) { return m == 1 ? r : std::pow(r, m); }

// Eq.-(j6) arrangement of Phi_m(r); m = 1 reproduces phi(r).
double theorem2_phim_residual(double r, int m) {
  const double s = pow_int(r, m);
  const double log_one_minus_s = cesbohr::detail::log_one_minus_pow(r, m);
  const double log_one_plus_s = std::log1p(s);
  const double cross = (-log_one_minus_s + log_one_plus_s) / s + 2.0 / (1.0 + s);
  return 0.5 * phi(1, s) * cross + 2.0 * phi_tail_from2(r) - log_one_plus_s / s;
}

double theorem_b_residual(double r, int n) {
  return 2.0 * std::pow(r, n + 1) - (1.0 - r) * std::log1p(-r) -
         2.0 * static_cast<double>(n) * r * (1.0 - r) * phi(n, r);
}

constexpr double kBracketWidth = 1e-12;

bool opposite_signs(double x, double y) { return (x < 0.0) != (y < 0.0); }

}  // namespace

RadiusEquation RadiusEquation::theorem2_rm(int m) {
  if (m < 1) throw std::domain_error("theorem2_rm: need m >= 1");
  return {EquationKind::Theorem2Rm, m};
}
RadiusEquation RadiusEquation::theorem2_phim(int m) {
  if (m < 1) throw std::domain_error("theorem2_phim: need m >= 1");
  return {EquationKind::Theorem2PhiM, m};
}
RadiusEquation RadiusEquation::theorem_b(int n) {
  if (n < 1) throw std::domain_error("theorem_b: need N >= 1");
  return {EquationKind::TheoremB, 1, n};
}

double theorem1_phi_statement_form(double r) {
  require_open_unit(r, "theorem1_phi_statement_form");
  const double lg1m = std::log1p(-r);
  const double lg1p = std::log1p(r);
  const double cross = (-lg1m + lg1p) / r + 2.0 / (1.0 + r);
  return -lg1p / r + 0.5 * phi(1, r) * cross + 2.0 * phi_tail_from2(r);
}

double residual(const RadiusEquation& eq, double r) {
  require_open_unit(r, "residual");
  switch (eq.kind) {
    case EquationKind::TheoremA:
      return theorem_a_residual(r);
    case EquationKind::PickBoundR:
      return pick_bound_residual_in(r, one_minus_pow(r, 2));
    case EquationKind::Theorem1Phi:
      return theorem1_phi_r8(r);
    case EquationKind::Theorem2Rm:
      return pick_bound_residual_in(pow_int(r, eq.m), one_minus_pow(r, 2 * eq.m));
    case EquationKind::Theorem2PhiM:
      return theorem2_phim_residual(r, eq.m);
    case EquationKind::TheoremB:
      return theorem_b_residual(r, eq.n);
  }
  throw std::logic_error("residual: unknown equation kind");
}

RootCertificate solve(const RadiusEquation& eq, double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("solve: need lo < hi");
  double f_lo = residual(eq, lo);
  double f_hi = residual(eq, hi);
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi))
    throw NonFiniteError("solve: non-finite residual at a bracket endpoint");
  if (!opposite_signs(f_lo, f_hi))
    throw NoSignChangeError("solve: residual has the same sign at both endpoints");

  int iterations = 0;
  while (hi - lo > kBracketWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at double resolution
    const double f_mid = residual(eq, mid);
    if (!std::isfinite(f_mid)) throw NonFiniteError("solve: non-finite residual inside bracket");
    if (opposite_signs(f_lo, f_mid)) {
      hi = mid;
      f_hi = f_mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
    ++iterations;
  }
  const double root = 0.5 * (lo + hi);
  return {lo, hi, f_lo, f_hi, root, residual(eq, root), iterations};
}

std::optional<std::pair<double, double>> find_bracket(const RadiusEquation& eq) {
  // Geometric scan, 1e-3 up to 1/2 and then 1/2 up to 1 - 1e-6 geometrically
  // in the distance to 1; 2000 points total.
  constexpr int kHalf = 1000;
  std::vector<double> grid;
  grid.reserve(2 * kHalf);
  const double up = std::pow(0.5 / 1e-3, 1.0 / (kHalf - 1));
  for (int i = 0; i < kHalf; ++i) grid.push_back(1e-3 * std::pow(up, i));
  const double down = std::pow(1e-6 / 0.5, 1.0 / (kHalf - 1));
  for (int i = 1; i < kHalf; ++i) grid.push_back(1.0 - 0.5 * std::pow(down, i));

  double prev_r = grid[0];
  double prev_f = residual(eq, prev_r);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double r = grid[i];
    const double f = residual(eq, r);
    if (!std::isfinite(f)) throw NonFiniteError("find_bracket: non-finite residual during scan");
    if (prev_f == 0.0 || opposite_signs(prev_f, f)) return std::make_pair(prev_r, r);
    prev_r = r;
    prev_f = f;
  }
  return std::nullopt;
}

std::pair<double, double> default_bracket(const RadiusEquation& eq) {
  if (auto bracket = find_bracket(eq)) return *bracket;
  throw NoRootInDomainError("default_bracket: no sign change in (0,1)");
}

RootCertificate solve_default(const RadiusEquation& eq) {
  return solve(eq, default_bracket(eq));
}

}  // namespace cesbohr::radii
