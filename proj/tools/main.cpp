// Command-line front end: certified radii, inequality verification, Sturm
// certificates, sharpness demonstrations, figure data, and spot evaluation.
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cesbohr/acceptance.hpp"
#include "cesbohr/cesaro.hpp"
#include "cesbohr/radii.hpp"
#include "cesbohr/sturm.hpp"
#include "cesbohr/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

json certificate_json(const cesbohr::radii::RootCertificate& cert) {
  return json{{"root", cert.root},
              {"residual", cert.residual},
              {"bracket", {{"lo", cert.lo}, {"hi", cert.hi}, {"f_lo", cert.f_lo}, {"f_hi", cert.f_hi}}},
              {"iterations", cert.iterations}};
}

void print_certificate(std::ostream& out, const std::string& kind,
                       const cesbohr::radii::RootCertificate& cert, bool as_json) {
  if (as_json) {
    json j = certificate_json(cert);
    j["kind"] = kind;
    out << j.dump(2) << "\n";
  } else {
    out << kind << " root = " << fmt(cert.root) << "  (residual " << fmt(cert.residual)
        << ", bracket width " << fmt(cert.hi - cert.lo) << ", " << cert.iterations
        << " bisections)\n";
  }
}

struct GridDims {
  int a = 50;
  int r = 50;
};

GridDims parse_grid(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw CLI::ValidationError("--grid", "expected AxB, e.g. 50x50");
  try {
    GridDims dims{std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
    if (dims.a < 2 || dims.r < 2) throw CLI::ValidationError("--grid", "need at least 2x2");
    return dims;
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--grid", "expected AxB, e.g. 50x50");
  }
}

std::complex<double> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--z", "expected RE or RE,IM");
  }
}

int report_grid(std::ostream& out, const cesbohr::verify::GridReport& report, bool as_json) {
  if (as_json) {
    out << cesbohr::verify::to_json(report) << "\n";
  } else {
    out << report.id << ": " << (report.pass ? "pass" : "FAIL")
        << "  worst = " << fmt(report.worst_value) << " at (";
    for (std::size_t i = 0; i < report.worst_point.size(); ++i)
      out << (i ? ", " : "") << fmt(report.worst_point[i]);
    out << ")  [" << report.samples << " samples]\n";
  }
  return report.pass ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified verification of Bohr-type inequalities for the Cesaro operator"};
  app.fallthrough();
  bool as_json = false;
  bool run_all = false;
  std::string out_path;
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_flag("--all", run_all, "run the full acceptance suite and emit a summary report");
  app.add_option("--out", out_path, "write the report to this file instead of stdout");

  // ---- radius ----
  auto* radius = app.add_subcommand("radius", "certified roots of the radius equations");
  int rm_m = 2, phim_m = 1, tb_n = 1;
  auto* r_ta = radius->add_subcommand("theorem-a", "root of 2x - 3(1-x)log(1/(1-x)) = 0");
  auto* r_pick = radius->add_subcommand("pick-r", "root of 2(-r - log(1-r)) = r(1-r^2)");
  auto* r_t1 = radius->add_subcommand("theorem1", "root r_1 of the envelope phi(r)");
  auto* r_rm = radius->add_subcommand("theorem2-rm", "root of the substituted Pick equation in r^m");
  r_rm->add_option("--m", rm_m, "composition order m")->check(CLI::PositiveNumber);
  auto* r_phim = radius->add_subcommand("theorem2-phim", "root R_{m,1} of Phi_m(r)");
  r_phim->add_option("--m", phim_m, "composition order m")->check(CLI::PositiveNumber);
  auto* r_tb = radius->add_subcommand("theorem-b", "prior-work residual root (as printed)");
  r_tb->add_option("--n", tb_n, "tail start N")->check(CLI::PositiveNumber);
  radius->require_subcommand(1);

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "grid verification of claims and inequalities");
  auto* v_claims = verify_cmd->add_subcommand("claims", "every registered auxiliary-curve claim");
  double v_r = 0.43;
  std::string v_grid = "50x50";
  int v_m = 2;
  std::uint64_t v_seed = 1;
  int v_count = 100;
  auto* v_t1 = verify_cmd->add_subcommand("theorem1", "lhs <= rhs on a in [0,1] x r in (0,R]");
  v_t1->add_option("--r", v_r, "largest radius checked")->required();
  v_t1->add_option("--grid", v_grid, "grid AxB (default 50x50)");
  auto* v_t2 = verify_cmd->add_subcommand("theorem2", "composed lhs <= rhs on a grid");
  v_t2->add_option("--m", v_m, "composition order m")->check(CLI::PositiveNumber);
  v_t2->add_option("--r", v_r, "largest radius checked")->required();
  v_t2->add_option("--grid", v_grid, "grid AxB (default 50x50)");
  auto* v_rand = verify_cmd->add_subcommand("random", "randomized certified-function suite");
  v_rand->add_option("--seed", v_seed, "random seed");
  v_rand->add_option("--count", v_count, "number of random functions");
  v_rand->add_option("--r", v_r, "radius checked")->required();
  verify_cmd->require_subcommand(1);

  // ---- sharpness ----
  auto* sharp = app.add_subcommand("sharpness", "find a violating witness a beyond the radius");
  int s_m = 1;
  double s_r = 0.0, s_a_start = 0.9;
  sharp->add_option("--m", s_m, "composition order m")->check(CLI::PositiveNumber);
  sharp->add_option("--r", s_r, "radius, must exceed R_{m,1}")->required();
  sharp->add_option("--a-start", s_a_start, "starting witness parameter");

  // ---- figure ----
  auto* figure = app.add_subcommand("figure", "sampled curve data as CSV");
  std::string f_name, f_out;
  int f_steps = 999;
  double f_lo = 0.0, f_hi = 1.0;
  figure->add_option("name", f_name, "one of b2, b3b4, b2prime, f")->required();
  figure->add_option("--steps", f_steps, "number of rows")->check(CLI::Range(2, 100000000));
  figure->add_option("--out", f_out, "output path (stdout if omitted)");
  figure->add_option("--lo", f_lo, "range start");
  figure->add_option("--hi", f_hi, "range end");

  // ---- eval ----
  auto* eval_cmd = app.add_subcommand("eval", "spot evaluation");
  int e_k = 0;
  double e_r = 0.5, e_a = 0.5;
  std::string e_coeffs, e_z = "0.5,0";
  auto* e_phi = eval_cmd->add_subcommand("phi", "phi_k(r)");
  e_phi->add_option("--k", e_k, "index k")->required()->check(CLI::NonNegativeNumber);
  e_phi->add_option("--r", e_r, "radius")->required();
  auto* e_ces = eval_cmd->add_subcommand("cesaro", "Cf(z) for a CSV coefficient sequence");
  e_ces->add_option("--coeffs", e_coeffs, "CSV path, one re,im row per coefficient")->required();
  e_ces->add_option("--z", e_z, "evaluation point RE,IM");
  auto* e_lhs = eval_cmd->add_subcommand("lhs1", "extremal-family left side at (a, r)");
  e_lhs->add_option("--a", e_a, "witness parameter a")->required();
  e_lhs->add_option("--r", e_r, "radius")->required();
  eval_cmd->require_subcommand(1);

  // ---- sturm ----
  auto* sturm_cmd = app.add_subcommand("sturm", "exact real-root count on an interval");
  std::string st_poly;
  std::vector<std::string> st_interval;
  bool st_chain = false;
  sturm_cmd->add_option("--poly", st_poly, "coefficient list \"c0 c1 ...\" or \"39 - 45r - ...\"")
      ->required();
  sturm_cmd->add_option("--interval", st_interval, "rational endpoints LO HI; counts roots in (LO, HI]")
      ->expected(2);
  sturm_cmd->add_flag("--chain", st_chain, "print the Sturm chain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    using cesbohr::radii::RadiusEquation;

    std::ofstream out_file;
    if (!out_path.empty()) {
      out_file.open(out_path);
      if (!out_file) throw std::runtime_error("cannot open " + out_path);
    }
    std::ostream& out = out_file.is_open() ? static_cast<std::ostream&>(out_file) : std::cout;

    if (run_all) {
      const auto results = cesbohr::acceptance::run_all();
      if (as_json) {
        out << cesbohr::acceptance::to_json(results) << "\n";
      } else {
        for (const auto& r : results)
          out << "[" << (r.pass ? "PASS" : "FAIL") << "] " << (r.id < 10 ? "0" : "") << r.id
              << " " << r.name << " -- " << r.detail << "\n";
      }
      return cesbohr::acceptance::all_pass(results) ? kExitPass : kExitVerificationFailure;
    }

    if (radius->parsed()) {
      if (r_ta->parsed())
        print_certificate(out, "theorem-a", cesbohr::radii::solve_default(RadiusEquation::theorem_a()), as_json);
      else if (r_pick->parsed())
        print_certificate(out, "pick-r", cesbohr::radii::solve_default(RadiusEquation::pick_bound_r()), as_json);
      else if (r_t1->parsed())
        print_certificate(out, "theorem1", cesbohr::radii::solve_default(RadiusEquation::theorem1_phi()), as_json);
      else if (r_rm->parsed())
        print_certificate(out, "theorem2-rm(m=" + std::to_string(rm_m) + ")",
                          cesbohr::radii::solve_default(RadiusEquation::theorem2_rm(rm_m)),
                          as_json);
      else if (r_phim->parsed())
        print_certificate(out, "theorem2-phim(m=" + std::to_string(phim_m) + ")",
                          cesbohr::radii::solve_default(RadiusEquation::theorem2_phim(phim_m)),
                          as_json);
      else if (r_tb->parsed()) {
        const auto eq = RadiusEquation::theorem_b(tb_n);
        const auto bracket = cesbohr::radii::find_bracket(eq);
        if (!bracket) {
          std::string note = "no sign change in (0,1) along the 2000-point scan";
          if (tb_n == 1)
            note += "; at N=1 the residual simplifies to 2r + (1-r)log(1-r), "
                    "which is positive on (0,1)";
          if (as_json)
            out << json{{"kind", "theorem-b"},
                        {"n", tb_n},
                        {"outcome", "no-root-in-domain"},
                        {"note", note}}
                       .dump(2)
                << "\n";
          else
            out << "theorem-b (N=" << tb_n << "): no-root-in-domain -- " << note << "\n";
        } else {
          print_certificate(out, "theorem-b(N=" + std::to_string(tb_n) + ")",
                            cesbohr::radii::solve(eq, *bracket), as_json);
        }
      }
      return kExitPass;
    }

    if (verify_cmd->parsed()) {
      if (v_claims->parsed()) {
        const auto reports = cesbohr::verify::check_all_claims();
        bool all = true;
        if (as_json) {
          json arr = json::array();
          for (const auto& rep : reports) {
            arr.push_back(json::parse(cesbohr::verify::to_json(rep)));
            all = all && rep.pass;
          }
          out << arr.dump(2) << "\n";
        } else {
          for (const auto& rep : reports) {
            all = all && rep.pass;
            out << (rep.pass ? (rep.warn ? "pass (warn) " : "pass        ") : "FAIL        ")
                << rep.id << "  worst = " << fmt(rep.worst_value) << "\n";
          }
        }
        return all ? kExitPass : kExitVerificationFailure;
      }
      if (v_t1->parsed()) {
        const GridDims dims = parse_grid(v_grid);
        return report_grid(out, cesbohr::verify::check_theorem1_inequality(v_r, dims.a, dims.r),
                           as_json);
      }
      if (v_t2->parsed()) {
        const GridDims dims = parse_grid(v_grid);
        return report_grid(out,
                           cesbohr::verify::check_theorem2_inequality(v_m, v_r, dims.a, dims.r),
                           as_json);
      }
      if (v_rand->parsed())
        return report_grid(out, cesbohr::verify::random_schwarz_suite(v_seed, v_count, v_r),
                           as_json);
    }

    if (sharp->parsed()) {
      const auto result = cesbohr::verify::sharpness_scan(s_m, s_r, s_a_start);
      if (as_json) {
        out << json{{"m", s_m},
                    {"r", s_r},
                    {"violation_found", result.violation_found},
                    {"a", result.a},
                    {"excess", result.excess},
                    {"steps", result.steps}}
                   .dump(2)
            << "\n";
      } else if (result.violation_found) {
        out << "violation at a = " << fmt(result.a) << ": lhs - rhs = " << fmt(result.excess)
            << " (" << result.steps << " steps)\n";
      } else {
        out << "no violation found up to a = " << fmt(result.a) << " (reported, not asserted)\n";
      }
      return result.violation_found ? kExitPass : kExitVerificationFailure;
    }

    if (figure->parsed()) {
      const auto table = cesbohr::verify::emit_figure(f_name, f_lo, f_hi, f_steps);
      if (!f_out.empty()) {
        std::ofstream csv(f_out);
        if (!csv) throw std::runtime_error("cannot open " + f_out);
        cesbohr::verify::write_csv(table, csv);
        std::cout << "wrote " << table.rows.size() << " rows to " << f_out << "\n";
      } else {
        cesbohr::verify::write_csv(table, out);
      }
      return kExitPass;
    }

    if (eval_cmd->parsed()) {
      if (e_phi->parsed()) {
        const double v = cesbohr::phi(e_k, cesbohr::Radius(e_r));
        if (as_json)
          out << json{{"k", e_k}, {"r", e_r}, {"phi", v}}.dump(2) << "\n";
        else
          out << fmt(v) << "\n";
      } else if (e_ces->parsed()) {
        const auto f = cesbohr::load_coeffs_csv_file(e_coeffs);
        const auto z = parse_complex(e_z);
        const auto screen = cesbohr::screen_lemma2(f);
        const auto value = cesbohr::cesaro_eval_series(f, z, cesbohr::Radius(std::abs(z)));
        if (as_json) {
          out << json{{"z", {z.real(), z.imag()}},
                      {"value", {value.value.real(), value.value.imag()}},
                      {"abs", std::abs(value.value)},
                      {"truncation_error", value.truncation_error},
                      {"certified_in_unit_ball", screen.certified}}
                     .dump(2)
              << "\n";
        } else {
          out << "Cf(z) = " << fmt(value.value.real()) << " + " << fmt(value.value.imag())
              << "i  (truncation error <= " << fmt(value.truncation_error) << ")"
              << (screen.certified ? "" : "  [not certified in the unit ball]") << "\n";
        }
      } else if (e_lhs->parsed()) {
        const double lhs =
            cesbohr::theorem1_lhs(cesbohr::MoebiusWitness(e_a), cesbohr::Radius(e_r));
        const double rhs = cesbohr::rhs_majorant(e_r, 1);
        if (as_json)
          out << json{{"a", e_a}, {"r", e_r}, {"lhs", lhs}, {"rhs", rhs}}.dump(2) << "\n";
        else
          out << "lhs = " << fmt(lhs) << "  rhs = " << fmt(rhs) << "  margin = "
              << fmt(rhs - lhs) << "\n";
      }
      return kExitPass;
    }

    if (sturm_cmd->parsed()) {
      using namespace cesbohr::sturm;
      const RationalPoly p = st_poly.find_first_of("rxyzst^") == std::string::npos
                                 ? RationalPoly::from_coeff_list(st_poly)
                                 : RationalPoly::parse(st_poly);
      json j{{"poly", p.to_string()}};
      if (st_chain) {
        const auto c = chain(p);
        if (as_json) {
          json chain_json = json::array();
          for (const auto& q : c.polys) chain_json.push_back(q.to_string());
          j["chain"] = chain_json;
        } else {
          out << "chain (" << c.polys.size() << " polynomials):\n";
          for (const auto& q : c.polys) out << "  " << q.to_string() << "\n";
        }
      }
      if (!st_interval.empty()) {
        Rational a(st_interval[0]), b(st_interval[1]);
        a.canonicalize();
        b.canonicalize();
        const int count = count_roots(p, a, b);
        if (as_json) {
          j["interval"] = {st_interval[0], st_interval[1]};
          j["count"] = count;
          out << j.dump(2) << "\n";
        } else {
          out << "distinct real roots in (" << st_interval[0] << ", " << st_interval[1]
              << "]: " << count << "\n";
        }
      } else if (as_json) {
        out << j.dump(2) << "\n";
      } else if (!st_chain) {
        out << p.to_string() << "\n";
      }
      return kExitPass;
    }

    std::cerr << app.help() << "\n";
    return kExitUsage;
  } catch (const cesbohr::verify::NotBeyondRadiusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const cesbohr::radii::NoRootInDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
