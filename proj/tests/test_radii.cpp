#include "cesbohr/radii.hpp"

#include <cmath>
#include <vector>

#include <doctest.h>

using namespace cesbohr::radii;

namespace {

double theorem_a_oracle(double r) { return 2.0 * r - 3.0 * (1.0 - r) * std::log(1.0 / (1.0 - r)); }

int sign_changes_on_grid(const RadiusEquation& eq, int points, double* first_change) {
  int changes = 0;
  double prev = residual(eq, 1.0 / (points + 1));
  for (int i = 1; i < points; ++i) {
    const double r = (i + 1) / static_cast<double>(points + 1);
    const double value = residual(eq, r);
    if ((prev < 0.0) != (value < 0.0)) {
      if (changes == 0 && first_change) *first_change = r;
      ++changes;
    }
    prev = value;
  }
  return changes;
}

}  // namespace

TEST_CASE("residual spot values") {
  CHECK(std::abs(residual(RadiusEquation::theorem_a(), 0.5335)) < 1e-3);
  CHECK(std::abs(residual(RadiusEquation::pick_bound_r(), 0.493411)) < 1e-5);

  // independent arrangement at r = 1/2
  const double at_half = residual(RadiusEquation::theorem_a(), 0.5);
  CHECK(std::abs(at_half - theorem_a_oracle(0.5)) < 1e-12);
  CHECK(std::abs(at_half - (-0.0397)) < 1e-4);

  CHECK(std::abs(residual(RadiusEquation::theorem1_phi(), 1e-6) + 1.0) < 1e-4);
}

TEST_CASE("Phi_1 is phi: the j6 and r8 arrangements agree") {
  for (int i = 0; i < 2000; ++i) {
    const double r = 1e-4 + (0.99 - 1e-4) * i / 1999.0;
    CHECK(std::abs(residual(RadiusEquation::theorem2_phim(1), r) -
                   residual(RadiusEquation::theorem1_phi(), r)) <= 1e-12);
  }
}

TEST_CASE("statement display and r8 arrangement of phi agree to 1e-11") {
  for (int i = 0; i < 10000; ++i) {
    const double r = 1e-6 + (0.999 - 1e-6) * i / 9999.0;
    CHECK(std::abs(theorem1_phi_statement_form(r) -
                   residual(RadiusEquation::theorem1_phi(), r)) <= 1e-11);
  }
}

TEST_CASE("solve: certified roots match the published constants") {
  const RootCertificate a = solve(RadiusEquation::theorem_a(), 0.5, 0.6);
  CHECK(std::abs(a.root - 0.5335) <= 5e-4);

  const RootCertificate pick = solve(RadiusEquation::pick_bound_r(), 0.4, 0.6);
  CHECK(std::abs(pick.root - 0.493411) <= 1e-5);

  const RootCertificate r1 = solve(RadiusEquation::theorem1_phi(), 0.3, 0.4935);
  CHECK(std::abs(r1.root - 0.432) <= 2e-3);

  // scan oracle: the only sign change of phi sits where the certificate says
  double scan_root = 0.0;
  CHECK(sign_changes_on_grid(RadiusEquation::theorem1_phi(), 10000, &scan_root) == 1);
  CHECK(std::abs(scan_root - r1.root) < 1e-3);

  const RootCertificate rm2 = solve(RadiusEquation::theorem2_rm(2), 0.6, 0.8);
  CHECK(std::abs(rm2.root - std::sqrt(0.493411)) <= 1e-4);
}

TEST_CASE("certificates carry sign-change evidence at width 1e-12") {
  for (const RadiusEquation eq :
       {RadiusEquation::theorem_a(), RadiusEquation::pick_bound_r(),
        RadiusEquation::theorem1_phi(), RadiusEquation::theorem2_rm(3),
        RadiusEquation::theorem2_phim(2)}) {
    const RootCertificate cert = solve_default(eq);
    CHECK(cert.lo < cert.root);
    CHECK(cert.root < cert.hi);
    CHECK(cert.hi - cert.lo <= 1e-12);
    CHECK(((cert.f_lo < 0.0) != (cert.f_hi < 0.0)));
    CHECK(std::abs(cert.residual) <= 1e-10);
    CHECK(cert.iterations > 20);
  }
}

TEST_CASE("orderings between the certified radii") {
  const double r1 = solve_default(RadiusEquation::theorem1_phi()).root;
  const double pick = solve_default(RadiusEquation::pick_bound_r()).root;
  CHECK(r1 <= pick + 1e-12);

  for (int m : {1, 2, 3}) {
    const double phim = solve_default(RadiusEquation::theorem2_phim(m)).root;
    const double rm = solve_default(RadiusEquation::theorem2_rm(m)).root;
    CHECK(phim <= rm);
  }
}

TEST_CASE("R_m obeys the substitution scaling law") {
  const double pick = solve_default(RadiusEquation::pick_bound_r()).root;
  for (int m : {2, 3, 5}) {
    const double rm = solve_default(RadiusEquation::theorem2_rm(m)).root;
    CHECK(std::abs(rm - std::pow(pick, 1.0 / m)) <= 1e-9);
  }
}

TEST_CASE("phi and Phi_m are strictly increasing with exactly one sign change") {
  for (const RadiusEquation eq : {RadiusEquation::theorem1_phi(), RadiusEquation::theorem2_phim(2),
                                  RadiusEquation::theorem2_phim(3)}) {
    double prev = residual(eq, 1.0 / 10001.0);
    int changes = 0;
    for (int i = 1; i < 10000; ++i) {
      const double r = (i + 1) / 10001.0;
      const double value = residual(eq, r);
      CHECK(value > prev);
      if ((prev < 0.0) != (value < 0.0)) ++changes;
      prev = value;
    }
    CHECK(changes == 1);
  }
}

TEST_CASE("endpoint limits at r -> 0+") {
  CHECK(residual(RadiusEquation::theorem1_phi(), 1e-6) > -1.0 - 1e-4);
  CHECK(residual(RadiusEquation::theorem1_phi(), 1e-6) < -1.0 + 1e-4);
  for (int m : {1, 2, 3}) {
    const double v = residual(RadiusEquation::theorem2_phim(m), 1e-6);
    CHECK(v > -1.0 - 1e-4);
    CHECK(v < -1.0 + 1e-4);
  }
}

TEST_CASE("default_bracket finds the documented brackets") {
  const auto a = default_bracket(RadiusEquation::theorem_a());
  CHECK(a.first < 0.5335892);
  CHECK(a.second > 0.5335892);

  const auto t1 = default_bracket(RadiusEquation::theorem1_phi());
  CHECK(t1.first > 0.3);
  CHECK(t1.second < 0.5);

  // Theorem B as printed: no sign change anywhere in (0,1) at N = 1
  CHECK_FALSE(find_bracket(RadiusEquation::theorem_b(1)).has_value());
  CHECK_THROWS_AS(default_bracket(RadiusEquation::theorem_b(1)), NoRootInDomainError);
}

TEST_CASE("theorem-B residual at N = 1 collapses to 2r + (1-r)log(1-r) > 0") {
  for (int i = 0; i < 1000; ++i) {
    const double r = (i + 1) / 1001.0;
    const double simplified = 2.0 * r + (1.0 - r) * std::log1p(-r);
    CHECK(std::abs(residual(RadiusEquation::theorem_b(1), r) - simplified) < 1e-11);
    CHECK(simplified > 0.0);
  }
}

TEST_CASE("solver error paths") {
  CHECK_THROWS_AS(solve(RadiusEquation::theorem_a(), 0.1, 0.2), NoSignChangeError);
  CHECK_THROWS_AS(solve(RadiusEquation::theorem_a(), 0.6, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(residual(RadiusEquation::theorem_a(), 0.0), std::domain_error);
  CHECK_THROWS_AS(residual(RadiusEquation::theorem_a(), 1.0), std::domain_error);
  CHECK_THROWS_AS(RadiusEquation::theorem2_rm(0), std::domain_error);
  CHECK_THROWS_AS(RadiusEquation::theorem_b(0), std::domain_error);
}
