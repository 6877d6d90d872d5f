// Registry of the named auxiliary curves from the two main proofs, each with
// its claimed sign/monotonicity property, plus grid verification of the main
// inequalities, the sharpness demonstration, and figure-data emission.
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cesbohr/cesaro.hpp"

namespace cesbohr::verify {

class UnknownCurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class CurveDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotBeyondRadiusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Monotone claims act along the first coordinate of the point (a for the
/// two-variable curves, r for the one-variable ones).
enum class Claim { Nonneg, Nonpos, Increasing, Decreasing };

struct AxisRange {
  double lo;
  double hi;
  bool closed_lo = false;
  bool closed_hi = false;
};

struct AuxCurve {
  std::string name;
  std::string formula;  // short human-readable definition
  Claim claim;
  std::vector<AxisRange> claim_domain;
  std::vector<AxisRange> eval_domain;
  std::function<double(const std::vector<double>&)> fn;
  int arity() const { return static_cast<int>(claim_domain.size()); }
};

/// Outcome of a grid scan: worst value against the claim and where it occurred.
struct GridReport {
  std::string id;
  std::vector<AxisRange> grid_axes;
  std::vector<int> grid_counts;
  double step = 0.0;  // largest grid step used ("grid evidence at step h")
  double worst_value = 0.0;
  std::vector<double> worst_point;
  bool pass = false;
  bool warn = false;  // sign claims that dip into (-1e-10, 0)
  long samples = 0;
};

std::string to_json(const GridReport& report);

const std::vector<AuxCurve>& registry();
const AuxCurve& find_curve(std::string_view name);
std::vector<std::string> curve_names();

double eval_aux(std::string_view name, const std::vector<double>& point);

/// Grid check at the registry defaults (2000 points per axis; 200x200 for 2D).
GridReport check_claim(std::string_view name);
GridReport check_claim(std::string_view name, const std::vector<int>& counts);
std::vector<GridReport> check_all_claims();

/// Certified radii backing the claim domains and the sharpness gate (cached).
double theorem1_radius();       // r_1, root of phi
double pick_bound_radius();     // R ~ 0.493411
double theorem2_radius(int m);  // R_{m,1}, root of Phi_m

struct SharpnessResult {
  bool violation_found;
  double a;
  double excess;  // lhs - rhs at the reported a
  int steps;
};

/// Walks a up along 1 - (1-a)/2 from a_start looking for theorem2_lhs > rhs.
/// Throws NotBeyondRadiusError when r is not beyond the certified radius.
/// A scan that exhausts a without a violation is reported, not asserted.
SharpnessResult sharpness_scan(int m, double r, double a_start = 0.9);

/// Same walk without the radius gate (used to confirm absence of violations
/// below the radius); stops once 1 - a <= one_minus_a_floor.
SharpnessResult scan_for_violation(int m, double r, double a_start,
                                   double one_minus_a_floor = 1e-12);

/// Max of theorem1_lhs - rhs_majorant over a in [0,1] x r in (0, r_max];
/// pass means worst <= 1e-12.
GridReport check_theorem1_inequality(double r_max, int a_count = 50, int r_count = 50);
GridReport check_theorem2_inequality(int m, double r_max, int a_count = 50, int r_count = 50);

struct FigureTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Sampled figure data: "b2", "b3b4" (two value columns), "b2prime", "f".
FigureTable emit_figure(std::string_view name, double lo, double hi, int steps);
FigureTable emit_figure(std::string_view name, int steps);
void write_csv(const FigureTable& table, std::ostream& out);

/// A random certified member of the unit ball: a finite Blaschke product of
/// degree <= 4 (zeros in |z| <= 0.8) or a polynomial rescaled below sup-norm 1.
CoeffSeq random_certified_sequence(std::mt19937_64& rng);

/// Checks theorem1_lhs_general <= rhs_majorant + truncation slack on `count`
/// random certified sequences; worst_value is the smallest margin observed.
GridReport random_schwarz_suite(std::uint64_t seed, int count, double r);

}  // namespace cesbohr::verify
