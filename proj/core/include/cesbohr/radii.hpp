// Residual functions whose positive roots are the radii of the main
// inequalities, and certified root-finding by bracketed bisection.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

namespace cesbohr::radii {

enum class EquationKind {
  TheoremA,     // 2x - 3(1-x) log(1/(1-x)) = 0, root 0.5335...
  PickBoundR,   // 2(-r - log(1-r)) = r(1 - r^2), root ~ 0.493411
  Theorem1Phi,  // phi(r) = 0 (the a=1 envelope), root r_1
  Theorem2Rm,   // 2(-r^m - log(1-r^m)) = r^m (1 - r^{2m}), root R_m = R^{1/m}
  Theorem2PhiM, // Phi_m(r) = 0, root R_{m,1}
  TheoremB,     // 2r^{N+1} - (1-r)log(1-r) - 2N r (1-r) phi_N(r) = 0 (as printed)
};

struct RadiusEquation {
  EquationKind kind;
  int m = 1;  // Theorem2Rm / Theorem2PhiM
  int n = 1;  // TheoremB

  static RadiusEquation theorem_a() { return {EquationKind::TheoremA}; }
  static RadiusEquation pick_bound_r() { return {EquationKind::PickBoundR}; }
  static RadiusEquation theorem1_phi() { return {EquationKind::Theorem1Phi}; }
  static RadiusEquation theorem2_rm(int m);
  static RadiusEquation theorem2_phim(int m);
  static RadiusEquation theorem_b(int n);
};

/// Final bisection bracket with endpoint signs: the sign-change evidence.
struct RootCertificate {
  double lo, hi;      // terminal bracket, hi - lo <= 1e-12
  double f_lo, f_hi;  // residuals at the terminal endpoints, opposite signs
  double root;        // bracket midpoint
  double residual;    // residual at the root
  int iterations;
};

class NoSignChangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NoRootInDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The residual of the given radius equation at r in (0,1).
double residual(const RadiusEquation& eq, double r);

/// Bisection to bracket width 1e-12 from a verified sign-change bracket.
RootCertificate solve(const RadiusEquation& eq, double lo, double hi);
inline RootCertificate solve(const RadiusEquation& eq, std::pair<double, double> bracket) {
  return solve(eq, bracket.first, bracket.second);
}

/// Sign-change bracket from a geometric scan of (1e-3, 1-1e-6) in <= 2000 steps,
/// or nullopt when the residual never changes sign (e.g. TheoremB with N = 1).
std::optional<std::pair<double, double>> find_bracket(const RadiusEquation& eq);

/// Same scan; throws NoRootInDomainError instead of returning nullopt.
std::pair<double, double> default_bracket(const RadiusEquation& eq);

RootCertificate solve_default(const RadiusEquation& eq);

/// The Theorem 1 statement display of phi(r) -- an independent arrangement of
/// residual(Theorem1Phi); the two agree to 1e-11 (tested).
double theorem1_phi_statement_form(double r);

}  // namespace cesbohr::radii
