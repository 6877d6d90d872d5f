#include "cesbohr/acceptance.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>

#include <json.hpp>

#include "cesbohr/cesaro.hpp"
#include "cesbohr/radii.hpp"
#include "cesbohr/sturm.hpp"
#include "cesbohr/verify.hpp"

namespace cesbohr::acceptance {

namespace {

using radii::RadiusEquation;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

CriterionResult theorem_a_radius() {
  const auto cert = radii::solve_default(RadiusEquation::theorem_a());
  const bool pass = std::abs(cert.root - 0.5335) <= 5e-4;
  return {1, "theorem-a radius 0.5335 +/- 5e-4", pass,
          "root=" + fmt(cert.root) + " residual=" + fmt(cert.residual)};
}

CriterionResult pick_bound() {
  const auto cert = radii::solve_default(RadiusEquation::pick_bound_r());
  const bool pass = std::abs(cert.root - 0.493411) <= 1e-5;
  return {2, "pick bound 0.493411 +/- 1e-5", pass, "root=" + fmt(cert.root)};
}

CriterionResult theorem1_radius_criterion() {
  const auto cert = radii::solve_default(RadiusEquation::theorem1_phi());
  const bool pass = std::abs(cert.residual) <= 1e-10 && cert.root <= 0.493411 &&
                    cert.root > 0.40 && cert.root < 0.45;
  return {3, "theorem-1 radius certified, <= 0.493411, in (0.40, 0.45)", pass,
          "r1=" + fmt(cert.root) + " |phi(r1)|=" + fmt(std::abs(cert.residual)) +
              " bracket_width=" + fmt(cert.hi - cert.lo)};
}

CriterionResult small_r_limits() {
  const double phi_limit = radii::residual(RadiusEquation::theorem1_phi(), 1e-6);
  bool pass = std::abs(phi_limit + 1.0) <= 1e-4;
  std::string detail = "phi(1e-6)=" + fmt(phi_limit);
  for (int m = 1; m <= 3; ++m) {
    const double v = radii::residual(RadiusEquation::theorem2_phim(m), 1e-6);
    pass = pass && std::abs(v + 1.0) <= 1e-4;
    detail += " Phi_" + std::to_string(m) + "(1e-6)=" + fmt(v);
  }
  return {4, "limits phi, Phi_m -> -1 at r -> 0+", pass, detail};
}

CriterionResult sturm_certificates() {
  using namespace sturm;
  const RationalPoly F = RationalPoly::from_coeff_list("39 -45 -7 43 13 -11 3 -3");
  const RationalPoly quintic = RationalPoly::from_coeff_list("8 8 -3 -17 11 9");
  const int f01 = count_roots(F, Rational(0), Rational(1));
  const int f12 = count_roots(F, Rational(1), Rational(2));
  const Rational f_at_1 = eval_exact(F, Rational(1));
  const Rational f_at_2 = eval_exact(F, Rational(2));
  const int q_pos = count_roots(quintic, Rational(0), Rational(1'000'000));
  const bool pass =
      f01 == 0 && f12 == 1 && f_at_1 == 32 && f_at_2 == -71 && q_pos == 0;
  return {5, "Sturm certificates for F and the quintic (exact)", pass,
          "F:(0,1]=" + std::to_string(f01) + " F:(1,2]=" + std::to_string(f12) +
              " F(1)=" + f_at_1.get_str() + " F(2)=" + f_at_2.get_str() +
              " quintic:(0,1e6]=" + std::to_string(q_pos)};
}

CriterionResult b2prime_spot() {
  const double v = verify::eval_aux("B2prime", {0.5});
  const bool pass = std::abs(v - 0.11592) <= 1e-4;
  return {6, "B2'(1/2) = 0.11592 +/- 1e-4", pass, "value=" + fmt(v)};
}

CriterionResult rm_scaling_law() {
  bool pass = true;
  std::string detail;
  for (int m : {2, 3}) {
    const double root = radii::solve_default(RadiusEquation::theorem2_rm(m)).root;
    const double expected = std::pow(0.493411, 1.0 / m);
    pass = pass && std::abs(root - expected) <= 1e-6;
    detail += "R_" + std::to_string(m) + "=" + fmt(root) + " (0.493411^(1/" +
              std::to_string(m) + ")=" + fmt(expected) + ") ";
  }
  return {7, "scaling law R_m = 0.493411^(1/m) +/- 1e-6, m in {2,3}", pass, detail};
}

CriterionResult m1_reduction() {
  double worst_phi = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double r = (i + 1) / 1001.0;
    worst_phi = std::max(worst_phi,
                         std::abs(radii::residual(RadiusEquation::theorem2_phim(1), r) -
                                  radii::residual(RadiusEquation::theorem1_phi(), r)));
  }
  double worst_lhs = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = i / 19.0;
    for (int j = 0; j < 20; ++j) {
      const double r = 0.05 + 0.85 * j / 19.0;
      worst_lhs = std::max(worst_lhs,
                           std::abs(theorem2_lhs(MoebiusWitness(a), 1, Radius(r)) -
                                    theorem1_lhs(MoebiusWitness(a), Radius(r))));
    }
  }
  const bool pass = worst_phi <= 1e-11 && worst_lhs == 0.0;
  return {8, "m=1 reduction: |Phi_1 - phi| <= 1e-11, theorem2_lhs == theorem1_lhs", pass,
          "max|Phi_1-phi|=" + fmt(worst_phi) + " max|lhs2-lhs1|=" + fmt(worst_lhs)};
}

CriterionResult inequality_inside_radius() {
  const double r1 = verify::theorem1_radius();
  const auto grid = verify::check_theorem1_inequality(r1, 50, 50);
  const auto rand_03 = verify::random_schwarz_suite(20250808, 100, 0.3);
  const auto rand_043 = verify::random_schwarz_suite(20250808, 100, 0.43);
  const bool pass = grid.pass && rand_03.pass && rand_03.worst_value > 0.0 &&
                    rand_043.pass && rand_043.worst_value > 0.0;
  return {9, "inequality holds inside the radius (grid + randomized suites)", pass,
          "grid_worst_excess=" + fmt(grid.worst_value) +
              " margin(r=0.3)=" + fmt(rand_03.worst_value) +
              " margin(r=0.43)=" + fmt(rand_043.worst_value)};
}

CriterionResult sharpness() {
  const double r1 = verify::theorem1_radius();
  const auto above1 = verify::sharpness_scan(1, r1 + 0.005);
  const auto below1 = verify::scan_for_violation(1, r1 - 0.005, 0.9, 1e-10);
  const double r21 = verify::theorem2_radius(2);
  const auto above2 = verify::sharpness_scan(2, r21 + 0.005);
  const auto below2 = verify::scan_for_violation(2, r21 - 0.005, 0.9, 1e-10);
  const bool pass = above1.violation_found && !below1.violation_found &&
                    above2.violation_found && !below2.violation_found &&
                    r21 <= 0.702432;
  return {10, "sharpness beyond r_1 and R_{2,1}; none below", pass,
          "a*(m=1)=" + fmt(above1.a) + " excess=" + fmt(above1.excess) +
              " R_{2,1}=" + fmt(r21) + " a*(m=2)=" + fmt(above2.a) +
              " excess=" + fmt(above2.excess)};
}

CriterionResult series_integral_agreement() {
  std::mt19937_64 rng(424242);
  const auto uniform = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
  double worst = 0.0;
  bool pass = true;
  for (int i = 0; i < 100; ++i) {
    const CoeffSeq f = verify::random_certified_sequence(rng);
    const double rad = 0.9 * std::sqrt(uniform());
    const std::complex<double> z = std::polar(rad, 2.0 * M_PI * uniform());
    const CesaroValue series = cesaro_eval_series(f, z, Radius(0.9));
    const std::complex<double> integral = cesaro_eval_integral(
        [&f, z](double t) {
          std::complex<double> acc{0.0, 0.0};
          for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = acc * (t * z) + *it;
          return acc;
        },
        z);
    const double diff = std::abs(series.value - integral);
    worst = std::max(worst, diff);
    if (diff > series.truncation_error + 1e-10) pass = false;
  }
  return {11, "series vs quadrature Cesaro values agree within stated bounds", pass,
          "max_discrepancy=" + fmt(worst)};
}

CriterionResult registry_suite() {
  bool pass = true;
  std::string worst_info = "all claims pass";
  for (const auto& report : verify::check_all_claims()) {
    if (!report.pass) {
      pass = false;
      worst_info = "FAILED " + report.id + " worst=" + fmt(report.worst_value);
      break;
    }
  }
  double worst_identity = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double r = (i + 1) / 2001.0;
    const double b2 = verify::eval_aux("B2", {r});
    const double b3 = verify::eval_aux("B3", {r});
    const double b4 = verify::eval_aux("B4", {r});
    worst_identity = std::max(worst_identity, std::abs(b2 - (b3 - b4)));
  }
  pass = pass && worst_identity <= 1e-10;
  return {12, "registry suite: every claim passes; B2 = B3 - B4 to 1e-10", pass,
          worst_info + "; max|B2-(B3-B4)|=" + fmt(worst_identity)};
}

CriterionResult theorem_b_anomaly() {
  const auto bracket = radii::find_bracket(RadiusEquation::theorem_b(1));
  const bool pass = !bracket.has_value();
  return {13, "theorem-B residual (N=1): NoRootInDomain reported", pass,
          pass ? "anomaly confirmed: the printed equation has no sign change in (0,1); "
                 "at N=1 it simplifies to 2r + (1-r)log(1-r) > 0"
               : "unexpected sign change found"};
}

}  // namespace

std::vector<CriterionResult> run_all() {
  return {theorem_a_radius(),  pick_bound(), theorem1_radius_criterion(),
          small_r_limits(),    sturm_certificates(), b2prime_spot(),
          rm_scaling_law(),    m1_reduction(), inequality_inside_radius(),
          sharpness(),         series_integral_agreement(), registry_suite(),
          theorem_b_anomaly()};
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string to_json(const std::vector<CriterionResult>& results) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : results) {
    items.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  nlohmann::json j{{"criteria", items}, {"all_pass", all_pass(results)}};
  return j.dump(2);
}

}  // namespace cesbohr::acceptance
