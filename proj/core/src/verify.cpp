#include "cesbohr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <mutex>
#include <ostream>
#include <unordered_map>

#include <json.hpp>

#include "cesbohr/radii.hpp"

namespace cesbohr::verify {

namespace {

using cesbohr::detail::log1p_over;
using cesbohr::detail::neg_log1m;
using cesbohr::detail::log_one_minus_pow;
using cesbohr::detail::one_minus_pow;

constexpr double kSignTol = 1e-10;  // floating-point slack for sign claims

double phi1(double r) { return phi(1, r); }
double tail2(double r) { return phi_tail_from2(r); }

// ---- Theorem 1 proof apparatus -------------------------------------------

// (log(1+u)/u - 1/(1+u))/u with its limit 1/2 at u = 0.
double a1_ratio(double u) {
  if (u < 1e-3) return 0.5 + u * (-2.0 / 3.0 + u * (0.75 - 0.8 * u));
  return (std::log1p(u) / u - 1.0 / (1.0 + u)) / u;
}

// A1(a,s) = (1/(a^2 s)) log(1+as) - 1/(a(1+as)); the s argument is r for the
// base family and r^m for the m-indexed one.
double aux_A1(double a, double s) { return s * a1_ratio(a * s); }

double aux_A2(double a, double s) {
  const double onep = 1.0 + a * s;
  return phi1(s) * (2.0 + a + a * s) / ((1.0 + a) * onep * onep);
}

// nl1m_s = -log(1-s), passed in so the m-indexed family can use the
// cancellation-safe 1 - r^m.
double aux_A3(double a, double s, double nl1m_s) {
  return -phi1(s) * (nl1m_s + std::log1p(a * s)) / (s * (1.0 + a) * (1.0 + a));
}

double aux_B1(double a, double r) { return r * (1.0 - a * r) / (2.0 * (1.0 + a * r)); }

double aux_B3(double r) {
  const double r2 = r * r;
  return r2 + 9.0 * r2 * r - 3.0 * r2 * r2 * r + r2 * r2 * r2;
}

double aux_B4(double r) {
  const double L = std::log1p(-r);
  const double p_lin = r - 4.0 * r * r + r * r * r + 2.0 * std::pow(r, 4);
  const double p_sq = 2.0 + 2.0 * r - 2.0 * r * r - 2.0 * r * r * r;
  return p_lin * L + p_sq * L * L;
}

double aux_B2(double r) {
  const double L = std::log1p(-r);
  const double p0 = r * r + 9.0 * std::pow(r, 3) - 3.0 * std::pow(r, 5) + std::pow(r, 6);
  const double p_lin = r - 4.0 * r * r + std::pow(r, 3) + 2.0 * std::pow(r, 4);
  const double p_sq = 2.0 + 2.0 * r - 2.0 * r * r - 2.0 * std::pow(r, 3);
  return p0 - p_lin * L - p_sq * L * L;
}

double aux_B2prime(double r) {
  const double L = std::log1p(-r);
  const double p0 =
      3.0 * r + 24.0 * r * r - 2.0 * std::pow(r, 3) - 15.0 * std::pow(r, 4) + 6.0 * std::pow(r, 5);
  const double p_lin = 3.0 + 16.0 * r + r * r - 8.0 * std::pow(r, 3);
  const double p_sq = -2.0 + 4.0 * r + 6.0 * r * r;
  return p0 + p_lin * L + p_sq * L * L;
}

double aux_g1(double r) { return 1.5 * r + std::log1p(-r) + r / (2.0 * (1.0 - r)); }

double aux_g2(double r) {
  return 4.5 * r + std::log1p(-r) - r / (2.0 * (1.0 + r)) + r / (1.0 - r) -
         r * r / ((1.0 + r) * (1.0 + r));
}

double aux_g2prime_num(double r) {
  return 8.0 + 8.0 * r - 3.0 * r * r - 17.0 * std::pow(r, 3) + 11.0 * std::pow(r, 4) +
         9.0 * std::pow(r, 5);
}

double aux_g3(double r) {
  const double num = 4.0 * r + 5.0 * r * r - 8.0 * std::pow(r, 3) + 2.0 * std::pow(r, 4) +
                     10.0 * std::pow(r, 5) + 3.0 * std::pow(r, 6);
  const double den = 2.0 * (1.0 - r) * (1.0 - r) * (1.0 + r) * (1.0 + r);
  return num / den + 2.0 * std::log1p(-r);
}

// The derivative-consistent arrangement (the printed display's log(1+r) is
// inconsistent with the printed g4' = F/(2(1-r)(3+r^2)^2) and with g4 >= 0).
double aux_g4(double r) {
  const double r2 = r * r;
  return (1.0 - r2) * r / (3.0 + r2) * (0.5 * (3.0 - r2) + 2.0 / (1.0 + r)) + neg_log1m(r);
}

double aux_F(double r) {
  // 39 - 45r - 7r^2 + 43r^3 + 13r^4 - 11r^5 + 3r^6 - 3r^7
  return 39.0 +
         r * (-45.0 +
              r * (-7.0 + r * (43.0 + r * (13.0 + r * (-11.0 + r * (3.0 + r * -3.0))))));
}

double aux_phi_a(double a, double r) {
  const double bracket =
      neg_log1m(r) / r + std::log1p(a * r) / r + a * (1.0 + a) / (1.0 + a * r);
  return phi1(r) / (1.0 + a) * bracket + (1.0 + a) * tail2(r) - log1p_over(a * r);
}

double aux_psi(double a, double r) { return (1.0 - a) * aux_phi_a(a, r); }

double aux_dphi_da(double a, double r) {
  return aux_A1(a, r) + aux_A2(a, r) + aux_A3(a, r, neg_log1m(r)) + tail2(r);
}

double aux_Q(double a, double r) {
  return (theorem1_lhs(MoebiusWitness(a), Radius(r)) - rhs_majorant(r, 1)) / (1.0 - a);
}

// ---- Theorem 2 (m-indexed) apparatus -------------------------------------

double aux_Phi_a_m(double a, double r, int m) {
  const double s = std::pow(r, m);
  const double nl1m_s = -log_one_minus_pow(r, m);
  const double bracket = nl1m_s / s + std::log1p(a * s) / s + a * (1.0 + a) / (1.0 + a * s);
  return phi1(s) / (1.0 + a) * bracket + (1.0 + a) * tail2(r) - log1p_over(a * s);
}

double aux_Psi_m(double a, double r, int m) { return (1.0 - a) * aux_Phi_a_m(a, r, m); }

double aux_dPhi_da_m(double a, double r, int m) {
  const double s = std::pow(r, m);
  return aux_A1(a, s) + aux_A2(a, s) + aux_A3(a, s, -log_one_minus_pow(r, m)) + tail2(r);
}

double aux_B3m(double r, int m) {
  return std::pow(r, 2 * m) + std::pow(r, 2 * m + 1) + 8.0 * std::pow(r, 3 * m) -
         4.0 * std::pow(r, 3 * m + 1) + 4.0 * std::pow(r, 4 * m) - 2.0 * std::pow(r, 4 * m + 1) -
         std::pow(r, 5 * m) + std::pow(r, 5 * m + 1);
}

double aux_B4m(double r, int m) {
  return 4.0 * std::pow(r, 2 * m - 1) + 8.0 * std::pow(r, 3 * m - 1) +
         4.0 * std::pow(r, 4 * m - 1) - 4.0 * std::pow(r, 2 * m) - 8.0 * std::pow(r, 3 * m) -
         4.0 * std::pow(r, 4 * m);
}

double aux_B5m(double r, int m) {
  return -5.0 * std::pow(r, m) + 5.0 * std::pow(r, m + 1) - 5.0 * std::pow(r, 2 * m) +
         5.0 * std::pow(r, 2 * m + 1) - 2.0 * std::pow(r, 3 * m) + 2.0 * std::pow(r, 3 * m + 1);
}

double aux_B6m(double r, int m) {
  return -2.0 + 2.0 * r - 4.0 * std::pow(r, m) + 4.0 * std::pow(r, m + 1) -
         2.0 * std::pow(r, 2 * m) + 2.0 * std::pow(r, 2 * m + 1);
}

double aux_B2m(double r, int m) {
  const double lm = log_one_minus_pow(r, m);
  return aux_B3m(r, m) + aux_B4m(r, m) * std::log1p(-r) + aux_B5m(r, m) * lm +
         aux_B6m(r, m) * lm * lm;
}

double aux_g1m(double r, int m) {
  const double s = std::pow(r, m);
  const double omp = one_minus_pow(r, m);
  return 1.5 * m * s + m * s / (2.0 * omp) + m * log_one_minus_pow(r, m);
}

double aux_g2m(double r, int m) {
  const double s = std::pow(r, m);
  const double omp = one_minus_pow(r, m);
  const double onep = 1.0 + s;
  return 0.5 * m * s + m * s / omp - m * s / (2.0 * onep) - m * s * s / (onep * onep) +
         m * log_one_minus_pow(r, m);
}

double aux_g3m(double r, int m) {
  const double md = m;
  const double r3 = r * r * r;
  const double sq = md * (1.0 - 2.0 * r + r * r);  // m(1-r)^2 expanded as printed
  return std::pow(r, 5 * m) * sq + std::pow(r, 4 * m) * (-sq - 4.0 * r3) +
         std::pow(r, 3 * m) * (sq - 4.0 * r3) + std::pow(r, 2 * m) * (9.0 * sq + 4.0 * r3) +
         std::pow(r, m) * (4.0 * sq + 4.0 * r3);
}

double aux_g4m(double r, int m) {
  const double s = std::pow(r, m);
  const double omp = one_minus_pow(r, m);
  const double den = 2.0 * (1.0 - r) * (1.0 - r) * omp * (1.0 + s) * (1.0 + s);
  return aux_g3m(r, m) / den + 2.0 * m * log_one_minus_pow(r, m);
}

double aux_g5m(double r, int m) {
  const double md = m;
  const double m2 = md * md;
  const double r3 = r * r * r;
  const double r4 = r3 * r;
  const double cube = m2 * (1.0 - 3.0 * r + 3.0 * r * r - r * r * r);  // m^2 (1-r)^3
  const double edge = 6.0 * r3 + 2.0 * md * r3 - 2.0 * r4 - 2.0 * md * r4;
  return std::pow(r, 7 * m) * (-cube) + std::pow(r, 6 * m) * edge +
         std::pow(r, 5 * m) * (5.0 * cube + edge) +
         std::pow(r, 4 * m) * (6.0 * cube - 12.0 * r3 - 4.0 * md * r3 + 4.0 * r4 + 4.0 * md * r4) +
         std::pow(r, 3 * m) * (cube - 12.0 * r3 - 4.0 * md * r3 + 4.0 * r4 + 4.0 * md * r4) +
         std::pow(r, 2 * m) * (3.0 * cube + edge) + std::pow(r, m) * edge;
}

double aux_g6m(double r, int m) {
  const double s = std::pow(r, m);
  const double s2 = std::pow(r, 2 * m);
  const double om_s2 = one_minus_pow(r, 2 * m);
  return om_s2 * s / (3.0 + s2) * (0.5 * (3.0 - s2) + 2.0 / (1.0 + s)) -
         log_one_minus_pow(r, m);
}

// ---- registry -------------------------------------------------------------

AxisRange open01() { return {0.0, 1.0, false, false}; }
AxisRange halfopen01() { return {0.0, 1.0, true, false}; }
AxisRange closed01() { return {0.0, 1.0, true, true}; }

void add1(std::vector<AuxCurve>& v, std::string name, std::string formula, Claim claim,
          AxisRange claim_r, AxisRange eval_r, std::function<double(double)> f) {
  AuxCurve c;
  c.name = std::move(name);
  c.formula = std::move(formula);
  c.claim = claim;
  c.claim_domain = {claim_r};
  c.eval_domain = {eval_r};
  c.fn = [f = std::move(f)](const std::vector<double>& p) { return f(p[0]); };
  v.push_back(std::move(c));
}

void add2(std::vector<AuxCurve>& v, std::string name, std::string formula, Claim claim,
          AxisRange claim_a, AxisRange claim_r, AxisRange eval_a, AxisRange eval_r,
          std::function<double(double, double)> f) {
  AuxCurve c;
  c.name = std::move(name);
  c.formula = std::move(formula);
  c.claim = claim;
  c.claim_domain = {claim_a, claim_r};
  c.eval_domain = {eval_a, eval_r};
  c.fn = [f = std::move(f)](const std::vector<double>& p) { return f(p[0], p[1]); };
  v.push_back(std::move(c));
}

std::vector<AuxCurve> build_registry() {
  std::vector<AuxCurve> v;
  const double r1 = theorem1_radius();
  const double pick_r = pick_bound_radius();

  // Inequalities (r1), (r2), (r9).
  add1(v, "r1_tail", "r^2/(1-r) - 2 phi_2(r)", Claim::Nonneg, halfopen01(), halfopen01(),
       [](double r) { return r * r / (1.0 - r) - 2.0 * phi(2, r); });
  add1(v, "r2a", "log(1+r)/r - (1 - r/2)", Claim::Nonneg, open01(), open01(),
       [](double r) { return std::log1p(r) / r - 1.0 + 0.5 * r; });
  add1(v, "r2b", "-log(1-r) - r - r^2/2", Claim::Nonneg, halfopen01(), halfopen01(),
       [](double r) { return neg_log1m(r) - r - 0.5 * r * r; });
  add1(v, "r9", "(1/r)log(1/(1-r)) - (3-r^2)/2 beyond the Pick radius", Claim::Nonneg,
       {pick_r + 1e-9, 1.0 - 1e-6, true, true}, open01(),
       [](double r) { return neg_log1m(r) / r - 0.5 * (3.0 - r * r); });

  // B and g curves of the first proof.
  add2(v, "B1", "r(1-ar)/(2(1+ar))", Claim::Decreasing, closed01(), open01(), closed01(),
       open01(), aux_B1);
  add1(v, "B2", "B3 - B4 (monotone-increasing numerator of dphi/da)", Claim::Nonneg,
       halfopen01(), halfopen01(), aux_B2);
  add1(v, "B2prime", "derivative of B2", Claim::Nonneg, halfopen01(), halfopen01(), aux_B2prime);
  add1(v, "B3", "r^2 + 9r^3 - 3r^5 + r^6", Claim::Nonneg, closed01(), closed01(), aux_B3);
  add1(v, "B4", "(r-4r^2+r^3+2r^4)log(1-r) + (2+2r-2r^2-2r^3)log^2(1-r)", Claim::Nonneg,
       halfopen01(), halfopen01(), aux_B4);
  add1(v, "g1", "3r/2 + log(1-r) + r/(2(1-r))", Claim::Nonneg, halfopen01(), halfopen01(),
       aux_g1);
  add1(v, "g2", "9r/2 + log(1-r) - r/(2(1+r)) + r/(1-r) - r^2/(1+r)^2", Claim::Nonneg,
       halfopen01(), halfopen01(), aux_g2);
  add1(v, "g2prime_num", "8 + 8r - 3r^2 - 17r^3 + 11r^4 + 9r^5", Claim::Nonneg, closed01(),
       {0.0, 1e9, true, true}, aux_g2prime_num);
  add1(v, "g3", "(4r+5r^2-8r^3+2r^4+10r^5+3r^6)/(2(1-r)^2(1+r)^2) + 2log(1-r)", Claim::Nonneg,
       halfopen01(), halfopen01(), aux_g3);
  add1(v, "g4", "(1-r^2)r/(3+r^2)((3-r^2)/2 + 2/(1+r)) - log(1-r)", Claim::Nonneg, halfopen01(),
       halfopen01(), aux_g4);
  add1(v, "F", "39 - 45r - 7r^2 + 43r^3 + 13r^4 - 11r^5 + 3r^6 - 3r^7", Claim::Nonneg,
       closed01(), {0.0, 1e9, true, true}, aux_F);

  // The envelope phi in its two arrangements, and its positivity beyond R.
  add1(v, "phi", "envelope phi(r) (canonical arrangement)", Claim::Increasing, open01(),
       open01(), [](double r) {
         return radii::residual(radii::RadiusEquation::theorem1_phi(), r);
       });
  add1(v, "phi_statement", "envelope phi(r) (root-equation arrangement)", Claim::Increasing,
       open01(), open01(), radii::theorem1_phi_statement_form);
  add1(v, "phi_beyond_R", "phi(r) for r >= Pick radius", Claim::Nonneg,
       {pick_r, 1.0 - 1e-6, true, true}, open01(), [](double r) {
         return radii::residual(radii::RadiusEquation::theorem1_phi(), r);
       });

  // Two-variable curves of the first proof.
  add2(v, "A1", "(1/(a^2 r))log(1+ar) - 1/(a(1+ar))", Claim::Nonneg, closed01(), open01(),
       closed01(), open01(), [](double a, double r) { return aux_A1(a, r); });
  add2(v, "A2", "(-r-log(1-r))(2+a+ar)/(r(1+a)(1+ar)^2)", Claim::Decreasing, closed01(),
       open01(), closed01(), open01(), [](double a, double r) { return aux_A2(a, r); });
  add2(v, "A3", "-(-r-log(1-r))(-log(1-r)+log(1+ar))/(r^2(1+a)^2)", Claim::Increasing,
       closed01(), open01(), closed01(), open01(),
       [](double a, double r) { return aux_A3(a, r, neg_log1m(r)); });
  add2(v, "dphi_da", "A1 + A2 + A3 + r^2/(1-r) + r + 2 + (2/r)log(1-r)", Claim::Nonneg,
       closed01(), open01(), closed01(), open01(), aux_dphi_da);
  add2(v, "phi_a", "phi(a,r), increasing in a up to phi(1,r) = phi(r)", Claim::Increasing,
       closed01(), open01(), closed01(), open01(), aux_phi_a);
  add2(v, "psi", "(1-a) phi(a,r), nonpositive up to r_1", Claim::Nonpos, closed01(),
       {0.0, r1, false, true}, closed01(), open01(), aux_psi);
  add2(v, "Q", "exact scaled excess (theorem1_lhs - rhs)/(1-a)", Claim::Nonneg,
       {0.999, 1.0 - 1e-8, true, true}, {0.45, 0.49, true, true}, {0.0, 1.0, true, false},
       open01(), aux_Q);

  // The m-indexed family, carried for m = 1..6.
  for (int m = 1; m <= 6; ++m) {
    const std::string suffix = "_m" + std::to_string(m);
    const double rm1 = theorem2_radius(m);

    add1(v, "Phi" + suffix, "envelope Phi_m(r)", Claim::Increasing, open01(), open01(),
         [m](double r) { return radii::residual(radii::RadiusEquation::theorem2_phim(m), r); });
    add1(v, "B2" + suffix, "B3m + B4m log(1-r) + B5m log(1-r^m) + B6m log^2(1-r^m)",
         Claim::Nonneg, halfopen01(), halfopen01(), [m](double r) { return aux_B2m(r, m); });
    add1(v, "B3" + suffix, "polynomial part of B2m", Claim::Nonneg, closed01(), closed01(),
         [m](double r) { return aux_B3m(r, m); });
    add1(v, "B4" + suffix, "log(1-r) coefficient of B2m", Claim::Nonneg, closed01(), closed01(),
         [m](double r) { return aux_B4m(r, m); });
    add1(v, "B5" + suffix, "log(1-r^m) coefficient of B2m", Claim::Nonpos, closed01(),
         closed01(), [m](double r) { return aux_B5m(r, m); });
    add1(v, "B6" + suffix, "log^2(1-r^m) coefficient of B2m", Claim::Nonpos, closed01(),
         closed01(), [m](double r) { return aux_B6m(r, m); });
    add1(v, "g1" + suffix, "3mr^m/2 + mr^m/(2(1-r^m)) + m log(1-r^m)", Claim::Nonneg,
         halfopen01(), halfopen01(), [m](double r) { return aux_g1m(r, m); });
    add1(v, "g2" + suffix, "mr^m/2 + mr^m/(1-r^m) - mr^m/(2(1+r^m)) - mr^2m/(1+r^m)^2 + m log(1-r^m)",
         Claim::Nonneg, halfopen01(), halfopen01(), [m](double r) { return aux_g2m(r, m); });
    add1(v, "g3" + suffix, "polynomial numerator of the Phi_m' bound", Claim::Nonneg, closed01(),
         closed01(), [m](double r) { return aux_g3m(r, m); });
    add1(v, "g4" + suffix, "g3m/(2(1-r)^2(1-r^m)(1+r^m)^2) + 2m log(1-r^m)", Claim::Nonneg,
         halfopen01(), halfopen01(), [m](double r) { return aux_g4m(r, m); });
    add1(v, "g5" + suffix, "polynomial numerator of g4m'", Claim::Nonneg, closed01(), closed01(),
         [m](double r) { return aux_g5m(r, m); });
    add1(v, "g6" + suffix, "(1-r^2m)r^m/(3+r^2m)((3-r^2m)/2 + 2/(1+r^m)) - log(1-r^m)",
         Claim::Nonneg, halfopen01(), halfopen01(), [m](double r) { return aux_g6m(r, m); });

    add2(v, "A1" + suffix, "A1 in the variable r^m", Claim::Nonneg, closed01(), open01(),
         closed01(), open01(), [m](double a, double r) { return aux_A1(a, std::pow(r, m)); });
    add2(v, "A2" + suffix, "A2 in the variable r^m", Claim::Decreasing, closed01(), open01(),
         closed01(), open01(), [m](double a, double r) { return aux_A2(a, std::pow(r, m)); });
    add2(v, "A3" + suffix, "A3 in the variable r^m", Claim::Increasing, closed01(), open01(),
         closed01(), open01(), [m](double a, double r) {
           return aux_A3(a, std::pow(r, m), -log_one_minus_pow(r, m));
         });
    add2(v, "dPhi_da" + suffix, "A1m + A2m + A3m + r^2/(1-r) + r + 2 + (2/r)log(1-r)",
         Claim::Nonneg, closed01(), open01(), closed01(), open01(),
         [m](double a, double r) { return aux_dPhi_da_m(a, r, m); });
    add2(v, "Phi_a" + suffix, "Phi_m(a,r), increasing in a up to Phi_m(r)", Claim::Increasing,
         closed01(), open01(), closed01(), open01(),
         [m](double a, double r) { return aux_Phi_a_m(a, r, m); });
    add2(v, "Psi" + suffix, "(1-a) Phi_m(a,r), nonpositive up to R_{m,1}", Claim::Nonpos,
         closed01(), {0.0, rm1, false, true}, closed01(), open01(),
         [m](double a, double r) { return aux_Psi_m(a, r, m); });
  }

  return v;
}

bool inside(const AxisRange& ax, double v) {
  const bool lo_ok = ax.closed_lo ? v >= ax.lo : v > ax.lo;
  const bool hi_ok = ax.closed_hi ? v <= ax.hi : v < ax.hi;
  return lo_ok && hi_ok;
}

std::vector<double> axis_points(const AxisRange& ax, int count) {
  std::vector<double> pts;
  pts.reserve(count);
  if (ax.closed_lo && ax.closed_hi) {
    for (int i = 0; i < count; ++i)
      pts.push_back(ax.lo + (ax.hi - ax.lo) * i / static_cast<double>(count - 1));
  } else if (ax.closed_lo) {
    for (int i = 0; i < count; ++i)
      pts.push_back(ax.lo + (ax.hi - ax.lo) * i / static_cast<double>(count));
  } else if (ax.closed_hi) {
    for (int i = 0; i < count; ++i)
      pts.push_back(ax.lo + (ax.hi - ax.lo) * (i + 1) / static_cast<double>(count));
  } else {
    for (int i = 0; i < count; ++i)
      pts.push_back(ax.lo + (ax.hi - ax.lo) * (i + 1) / static_cast<double>(count + 1));
  }
  return pts;
}

}  // namespace

const std::vector<AuxCurve>& registry() {
  static const std::vector<AuxCurve> curves = build_registry();
  return curves;
}

const AuxCurve& find_curve(std::string_view name) {
  for (const auto& c : registry()) {
    if (c.name == name) return c;
  }
  throw UnknownCurveError("unknown curve: " + std::string(name));
}

std::vector<std::string> curve_names() {
  std::vector<std::string> names;
  names.reserve(registry().size());
  for (const auto& c : registry()) names.push_back(c.name);
  return names;
}

double eval_aux(std::string_view name, const std::vector<double>& point) {
  const AuxCurve& c = find_curve(name);
  if (point.size() != c.eval_domain.size())
    throw CurveDomainError("eval_aux: " + c.name + " expects " +
                           std::to_string(c.eval_domain.size()) + " coordinates");
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (!inside(c.eval_domain[i], point[i]))
      throw CurveDomainError("eval_aux: coordinate " + std::to_string(i) + " = " +
                             std::to_string(point[i]) + " outside the domain of " + c.name);
  }
  return c.fn(point);
}

GridReport check_claim(std::string_view name, const std::vector<int>& counts) {
  const AuxCurve& c = find_curve(name);
  if (counts.size() != c.claim_domain.size())
    throw std::invalid_argument("check_claim: counts/arity mismatch for " + c.name);

  GridReport report;
  report.id = c.name;
  report.grid_axes = c.claim_domain;
  report.grid_counts = counts;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 2) throw std::invalid_argument("check_claim: need >= 2 points per axis");
    report.step = std::max(report.step, (c.claim_domain[i].hi - c.claim_domain[i].lo) /
                                            static_cast<double>(counts[i]));
  }

  const bool sign_claim = c.claim == Claim::Nonneg || c.claim == Claim::Nonpos;
  const bool want_min = c.claim == Claim::Nonneg || c.claim == Claim::Increasing;
  double worst = want_min ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
  std::vector<double> worst_point;

  const auto consider = [&](double value, const std::vector<double>& at) {
    if (want_min ? value < worst : value > worst) {
      worst = value;
      worst_point = at;
    }
  };

  if (c.arity() == 1) {
    const std::vector<double> xs = axis_points(c.claim_domain[0], counts[0]);
    double prev = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double value = c.fn({xs[i]});
      ++report.samples;
      if (sign_claim) {
        consider(value, {xs[i]});
      } else if (i > 0) {
        consider(value - prev, {xs[i]});
      }
      prev = value;
    }
  } else {
    const std::vector<double> as = axis_points(c.claim_domain[0], counts[0]);
    const std::vector<double> rs = axis_points(c.claim_domain[1], counts[1]);
    for (double r : rs) {
      double prev = 0.0;
      for (std::size_t i = 0; i < as.size(); ++i) {
        const double value = c.fn({as[i], r});
        ++report.samples;
        if (sign_claim) {
          consider(value, {as[i], r});
        } else if (i > 0) {
          consider(value - prev, {as[i], r});
        }
        prev = value;
      }
    }
  }

  report.worst_value = worst;
  report.worst_point = std::move(worst_point);
  switch (c.claim) {
    case Claim::Nonneg:
    case Claim::Increasing:
      report.pass = worst >= -kSignTol;
      report.warn = report.pass && worst < 0.0;
      break;
    case Claim::Nonpos:
    case Claim::Decreasing:
      report.pass = worst <= kSignTol;
      report.warn = report.pass && worst > 0.0;
      break;
  }
  return report;
}

GridReport check_claim(std::string_view name) {
  const AuxCurve& c = find_curve(name);
  return check_claim(name, c.arity() == 1 ? std::vector<int>{2000} : std::vector<int>{200, 200});
}

std::vector<GridReport> check_all_claims() {
  std::vector<GridReport> reports;
  reports.reserve(registry().size());
  for (const auto& c : registry()) reports.push_back(check_claim(c.name));
  return reports;
}

double theorem1_radius() {
  static const double r1 =
      radii::solve_default(radii::RadiusEquation::theorem1_phi()).root;
  return r1;
}

double pick_bound_radius() {
  static const double r =
      radii::solve_default(radii::RadiusEquation::pick_bound_r()).root;
  return r;
}

double theorem2_radius(int m) {
  if (m < 1) throw std::domain_error("theorem2_radius: need m >= 1");
  static std::mutex mu;
  static std::unordered_map<int, double> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) {
    it = cache
             .emplace(m, radii::solve_default(radii::RadiusEquation::theorem2_phim(m)).root)
             .first;
  }
  return it->second;
}

SharpnessResult scan_for_violation(int m, double r, double a_start, double one_minus_a_floor) {
  if (m < 1) throw std::domain_error("scan_for_violation: need m >= 1");
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("scan_for_violation: need 0 < r < 1");
  if (!(a_start >= 0.0 && a_start < 1.0))
    throw std::domain_error("scan_for_violation: need 0 <= a_start < 1");

  const double rhs = rhs_majorant(r, m);
  double a = a_start;
  int steps = 0;
  while (true) {
    const double lhs = theorem2_lhs(MoebiusWitness(a), m, Radius(r));
    ++steps;
    if (lhs > rhs) return {true, a, lhs - rhs, steps};
    const double gap = 1.0 - a;
    if (gap <= one_minus_a_floor) return {false, a, lhs - rhs, steps};
    a = 1.0 - 0.5 * gap;
  }
}

SharpnessResult sharpness_scan(int m, double r, double a_start) {
  if (m >= 1 && r > 0.0 && r < 1.0 && r <= theorem2_radius(m))
    throw NotBeyondRadiusError("sharpness_scan: r is not beyond the certified radius R_{m,1}");
  return scan_for_violation(m, r, a_start, 1e-12);
}

namespace {

GridReport inequality_grid(const std::string& id, int m, double r_max, int a_count,
                           int r_count) {
  if (!(r_max > 0.0 && r_max < 1.0))
    throw std::domain_error("inequality grid: need 0 < r_max < 1");
  GridReport report;
  report.id = id;
  report.grid_axes = {closed01(), {0.0, r_max, false, true}};
  report.grid_counts = {a_count, r_count};
  report.step = std::max(1.0 / (a_count - 1), r_max / r_count);

  double worst = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < r_count; ++j) {
    const double r = r_max * (j + 1) / static_cast<double>(r_count);
    const double rhs = rhs_majorant(r, m);
    for (int i = 0; i < a_count; ++i) {
      const double a = i / static_cast<double>(a_count - 1);
      const double excess = theorem2_lhs(MoebiusWitness(a), m, Radius(r)) - rhs;
      ++report.samples;
      if (excess > worst) {
        worst = excess;
        report.worst_point = {a, r};
      }
    }
  }
  report.worst_value = worst;
  report.pass = worst <= 1e-12;
  return report;
}

}  // namespace

GridReport check_theorem1_inequality(double r_max, int a_count, int r_count) {
  return inequality_grid("theorem1_inequality", 1, r_max, a_count, r_count);
}

GridReport check_theorem2_inequality(int m, double r_max, int a_count, int r_count) {
  if (m < 1) throw std::domain_error("check_theorem2_inequality: need m >= 1");
  return inequality_grid("theorem2_inequality_m" + std::to_string(m), m, r_max, a_count,
                         r_count);
}

FigureTable emit_figure(std::string_view name, double lo, double hi, int steps) {
  if (steps < 2) throw std::invalid_argument("emit_figure: need steps >= 2");
  if (!(lo >= 0.0 && lo < hi && hi <= 1.0))
    throw CurveDomainError("emit_figure: range must satisfy 0 <= lo < hi <= 1");

  FigureTable table;
  const bool closed = name == "f";  // F is a polynomial, endpoints included
  const auto sample = [&](int i) {
    return closed ? lo + (hi - lo) * i / static_cast<double>(steps - 1)
                  : lo + (hi - lo) * (i + 1) / static_cast<double>(steps + 1);
  };

  if (name == "b2" || name == "b2prime" || name == "f") {
    table.columns = {"r", "value"};
    const auto& fn = name == "b2" ? aux_B2 : (name == "b2prime" ? aux_B2prime : aux_F);
    for (int i = 0; i < steps; ++i) {
      const double r = sample(i);
      table.rows.push_back({r, fn(r)});
    }
  } else if (name == "b3b4") {
    table.columns = {"r", "value_b3", "value_b4"};
    for (int i = 0; i < steps; ++i) {
      const double r = sample(i);
      table.rows.push_back({r, aux_B3(r), aux_B4(r)});
    }
  } else {
    throw UnknownCurveError("emit_figure: unknown figure " + std::string(name));
  }
  return table;
}

FigureTable emit_figure(std::string_view name, int steps) {
  return emit_figure(name, 0.0, 1.0, steps);
}

void write_csv(const FigureTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << table.columns[i] << (i + 1 < table.columns.size() ? "," : "\n");
  }
  char buf[32];
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
      out << buf << (i + 1 < row.size() ? "," : "\n");
    }
  }
}

namespace {

// Platform-independent uniforms from the raw engine stream.
double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

std::vector<std::complex<double>> poly_mul(const std::vector<std::complex<double>>& p,
                                           const std::vector<std::complex<double>>& q) {
  std::vector<std::complex<double>> out(p.size() + q.size() - 1, {0.0, 0.0});
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

constexpr std::size_t kRandomSeqLength = 64;

CoeffSeq random_blaschke(std::mt19937_64& rng) {
  const int degree = 1 + static_cast<int>(uniform01(rng) * 4.0);  // 1..4
  std::vector<std::complex<double>> numer{{1.0, 0.0}};
  std::vector<std::complex<double>> denom{{1.0, 0.0}};
  for (int j = 0; j < degree; ++j) {
    const double rad = 0.8 * std::sqrt(uniform01(rng));
    const double theta = 2.0 * M_PI * uniform01(rng);
    const std::complex<double> zero = std::polar(rad, theta);
    numer = poly_mul(numer, {-zero, {1.0, 0.0}});
    denom = poly_mul(denom, {{1.0, 0.0}, -std::conj(zero)});
  }
  const std::complex<double> unimodular = std::polar(1.0, 2.0 * M_PI * uniform01(rng));

  // Power series of 1/denom by the convolution recurrence (denom[0] = 1).
  std::vector<std::complex<double>> inv(kRandomSeqLength, {0.0, 0.0});
  inv[0] = {1.0, 0.0};
  for (std::size_t n = 1; n < kRandomSeqLength; ++n) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 1; i < denom.size() && i <= n; ++i) acc += denom[i] * inv[n - i];
    inv[n] = -acc;
  }

  CoeffSeq out;
  out.coeffs.assign(kRandomSeqLength, {0.0, 0.0});
  for (std::size_t n = 0; n < kRandomSeqLength; ++n) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < numer.size() && i <= n; ++i) acc += numer[i] * inv[n - i];
    out.coeffs[n] = unimodular * acc;
  }
  out.claimed_bound = 1.0;
  return out;
}

CoeffSeq random_bounded_polynomial(std::mt19937_64& rng) {
  const int degree = 4 + static_cast<int>(uniform01(rng) * 13.0);  // 4..16
  std::vector<std::complex<double>> coeffs(degree + 1);
  for (auto& c : coeffs) {
    // Box-Muller, decaying scale to keep the boundary maximum tame.
    const double u1 = std::max(uniform01(rng), 1e-300);
    const double u2 = uniform01(rng);
    const double mag = std::sqrt(-2.0 * std::log(u1));
    c = std::polar(mag, 2.0 * M_PI * u2);
  }
  for (std::size_t n = 0; n < coeffs.size(); ++n) coeffs[n] /= static_cast<double>(n + 1);

  // Certified sup-norm bound: dense boundary maximum inflated by the Bernstein
  // gap factor 1/(1 - pi d / N), then scaled below 1.
  constexpr int kBoundarySamples = 2048;
  double boundary_max = 0.0;
  for (int k = 0; k < kBoundarySamples; ++k) {
    const std::complex<double> z = std::polar(1.0, 2.0 * M_PI * k / kBoundarySamples);
    std::complex<double> acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    boundary_max = std::max(boundary_max, std::abs(acc));
  }
  const double gap = 1.0 - M_PI * degree / kBoundarySamples;
  const double scale = 0.97 * gap / boundary_max;

  CoeffSeq out;
  out.coeffs = std::move(coeffs);
  for (auto& c : out.coeffs) c *= scale;
  out.claimed_bound = 1.0;
  return out;
}

}  // namespace

CoeffSeq random_certified_sequence(std::mt19937_64& rng) {
  return uniform01(rng) < 0.5 ? random_blaschke(rng) : random_bounded_polynomial(rng);
}

GridReport random_schwarz_suite(std::uint64_t seed, int count, double r) {
  if (count < 0) throw std::invalid_argument("random_schwarz_suite: need count >= 0");
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("random_schwarz_suite: need 0 < r < 1");
  if (r > theorem1_radius())
    throw std::domain_error(
        "random_schwarz_suite: needs r <= r_1; the inequality is only guaranteed there");

  GridReport report;
  report.id = "random_schwarz_suite(seed=" + std::to_string(seed) +
              ",count=" + std::to_string(count) + ",r=" + std::to_string(r) + ")";
  report.pass = true;

  std::mt19937_64 rng(seed);
  const double rhs = rhs_majorant(r, 1);
  double worst_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    const CoeffSeq f = random_certified_sequence(rng);
    if (!screen_lemma2(f).certified) continue;  // never asserted for uncertified draws
    const BoundedReal lhs = theorem1_lhs_general(f, Radius(r));
    const double margin = rhs - lhs.value;
    ++report.samples;
    if (margin < worst_margin) {
      worst_margin = margin;
      report.worst_point = {static_cast<double>(i)};
    }
    if (margin < -(lhs.error_bound + 1e-12)) report.pass = false;
  }
  report.worst_value = report.samples > 0 ? worst_margin : 0.0;
  return report;
}

std::string to_json(const GridReport& report) {
  nlohmann::json axes = nlohmann::json::array();
  for (const auto& ax : report.grid_axes) {
    axes.push_back({{"lo", ax.lo},
                    {"hi", ax.hi},
                    {"closed_lo", ax.closed_lo},
                    {"closed_hi", ax.closed_hi}});
  }
  nlohmann::json j{{"id", report.id},
                   {"grid", {{"axes", axes}, {"counts", report.grid_counts},
                             {"step", report.step}, {"samples", report.samples}}},
                   {"worst_value", report.worst_value},
                   {"worst_point", report.worst_point},
                   {"pass", report.pass},
                   {"warn", report.warn}};
  return j.dump(2);
}

}  // namespace cesbohr::verify
