#include "cesbohr/cesaro.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cesbohr/quadrature.hpp"

namespace cesbohr {

namespace {

constexpr std::size_t kTruncationCap = 100'000;

void require_nonempty(const CoeffSeq& f) {
  if (f.coeffs.empty()) throw std::invalid_argument("CoeffSeq: need at least one coefficient");
}

// Smallest M with bound * r^{M+1}/(1-r) <= tol/2.
std::size_t truncation_length(double bound, double r, double tol) {
  if (r == 0.0 || bound == 0.0) return 0;
  double tail = bound * r / (1.0 - r);
  std::size_t m = 0;
  while (tail > 0.5 * tol) {
    tail *= r;
    if (++m > kTruncationCap)
      throw TruncationCapError("cesaro_eval_series: 1e5-term cap cannot reach the requested tolerance");
  }
  return m;
}

}  // namespace

Lemma2Screen screen_lemma2(const CoeffSeq& f, double slack) {
  require_nonempty(f);
  Lemma2Screen out;
  if (f.claimed_bound != 1.0) {
    out.certified = false;
    return out;
  }
  const double cap = 1.0 - std::norm(f.coeffs[0]);
  for (std::size_t n = 1; n < f.coeffs.size(); ++n) {
    if (std::abs(f.coeffs[n]) > cap + slack) out.violations.push_back(n);
  }
  out.certified = out.violations.empty() && std::abs(f.coeffs[0]) <= 1.0 + slack;
  return out;
}

CoeffSeq cesaro_coeffs(const CoeffSeq& f) {
  require_nonempty(f);
  CoeffSeq out;
  out.claimed_bound = f.claimed_bound;
  out.coeffs.reserve(f.coeffs.size());
  std::complex<double> partial{0.0, 0.0};
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
    partial += f.coeffs[n];
    out.coeffs.push_back(partial / static_cast<double>(n + 1));
  }
  return out;
}

CoeffSeq derivative_coeffs(const CoeffSeq& f) {
  require_nonempty(f);
  CoeffSeq out;
  if (f.coeffs.size() == 1) {
    out.coeffs = {std::complex<double>(0.0, 0.0)};
    out.claimed_bound = 0.0;
    return out;
  }
  out.coeffs.reserve(f.coeffs.size() - 1);
  std::complex<double> partial{0.0, 0.0};
  double max_partial = 0.0;
  for (std::size_t n = 0; n + 1 < f.coeffs.size(); ++n) {
    const std::complex<double> b = static_cast<double>(n + 1) * f.coeffs[n + 1];
    out.coeffs.push_back(b);
    partial += b;
    max_partial = std::max(max_partial, std::abs(partial));
  }
  // |Cesaro coeff of f'| = |b_0+...+b_min(n,L-1)|/(n+1) <= max partial-sum modulus.
  out.claimed_bound = max_partial;
  return out;
}

CoeffSeq moebius_coeffs(const MoebiusWitness& a, std::size_t count) {
  if (count == 0) throw std::invalid_argument("moebius_coeffs: need count >= 1");
  const double av = a.value();
  CoeffSeq out;
  out.coeffs.reserve(count);
  out.coeffs.emplace_back(av, 0.0);
  double factor = 1.0 - av * av;  // a_k = (1-a^2)(-a)^{k-1}
  for (std::size_t k = 1; k < count; ++k) {
    out.coeffs.emplace_back(factor, 0.0);
    factor *= -av;
  }
  return out;
}

CesaroValue cesaro_eval_series(const CoeffSeq& f, std::complex<double> z, Radius r_bound,
                               double tol) {
  require_nonempty(f);
  if (!(tol > 0.0)) throw std::invalid_argument("cesaro_eval_series: tolerance must be positive");
  const double r = r_bound.value();
  if (std::abs(z) >= 1.0) throw std::domain_error("cesaro_eval_series: need |z| < 1");
  if (std::abs(z) > r + 1e-15) throw std::domain_error("cesaro_eval_series: need |z| <= r_bound");

  const std::size_t m = truncation_length(f.claimed_bound, r, tol);
  std::complex<double> value{0.0, 0.0};
  std::complex<double> partial{0.0, 0.0};
  std::complex<double> zpow{1.0, 0.0};
  for (std::size_t n = 0; n <= m; ++n) {
    if (n < f.coeffs.size()) partial += f.coeffs[n];
    value += partial / static_cast<double>(n + 1) * zpow;
    zpow *= z;
  }
  const double trunc = f.claimed_bound * std::pow(r, static_cast<double>(m + 1)) / (1.0 - r);
  return {value, trunc};
}

std::complex<double> cesaro_eval_integral(const std::function<std::complex<double>(double)>& f_along,
                                          std::complex<double> z, double tol) {
  if (std::abs(z) >= 1.0) throw std::domain_error("cesaro_eval_integral: need |z| < 1");
  return integrate(
      [&f_along, z](double t) { return f_along(t) / (1.0 - t * z); }, 0.0, 1.0, tol);
}

double bohr_sum(const CoeffSeq& f, Radius r) {
  require_nonempty(f);
  double sum = 0.0;
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    sum += std::abs(f.coeffs[k]) * phi(static_cast<int>(k), r.value());
  }
  return sum;
}

double rhs_majorant(double r, int m) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("rhs_majorant: need 0 < r < 1");
  if (m < 1) throw std::domain_error("rhs_majorant: need m >= 1");
  const double s = m == 1 ? r : std::pow(r, m);
  return -detail::log_one_minus_pow(r, m) / s;
}

double rhs_majorant(Radius r, int m) { return rhs_majorant(r.value(), m); }

double theorem1_lhs(const MoebiusWitness& a, Radius r) {
  return extremal_cesaro_abs(a, r) + extremal_cesaro_deriv_abs(a, r) * phi(1, r.value()) +
         extremal_coeff_tail(a, r);
}

BoundedReal theorem1_lhs_general(const CoeffSeq& f, Radius r, double tol) {
  const std::complex<double> z{r.value(), 0.0};
  const CesaroValue cf = cesaro_eval_series(f, z, r, tol);
  const CoeffSeq fp = derivative_coeffs(f);
  const CesaroValue cfp = cesaro_eval_series(fp, z, r, tol);
  const double phi1 = phi(1, r.value());
  double tail = 0.0;
  for (std::size_t k = 2; k < f.coeffs.size(); ++k) {
    tail += std::abs(f.coeffs[k]) * phi(static_cast<int>(k), r.value());
  }
  return {std::abs(cf.value) + std::abs(cfp.value) * phi1 + tail,
          cf.truncation_error + cfp.truncation_error * phi1};
}

double theorem2_lhs(const MoebiusWitness& a, int m, Radius r) {
  if (m < 1) throw std::domain_error("theorem2_lhs: need m >= 1");
  const Radius s{m == 1 ? r.value() : std::pow(r.value(), m)};
  return extremal_cesaro_abs(a, s) + extremal_cesaro_deriv_abs(a, s) * phi(1, s.value()) +
         extremal_coeff_tail(a, r);
}

BoundedReal bohr_rogosinski_lhs(const CoeffSeq& f, int N, Radius r, double tol) {
  if (N < 1) throw std::domain_error("bohr_rogosinski_lhs: need N >= 1");
  const std::complex<double> z{r.value(), 0.0};
  const CesaroValue cf = cesaro_eval_series(f, z, r, tol);
  double tail = 0.0;
  for (std::size_t k = static_cast<std::size_t>(N); k < f.coeffs.size(); ++k) {
    tail += std::abs(f.coeffs[k]) * phi(static_cast<int>(k), r.value());
  }
  return {std::abs(cf.value) + tail, cf.truncation_error};
}

CoeffSeq load_coeffs_csv(std::istream& in) {
  CoeffSeq out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string re_text, im_text;
    std::getline(row, re_text, ',');
    std::getline(row, im_text, ',');
    try {
      const double re = std::stod(re_text);
      const double im = im_text.empty() ? 0.0 : std::stod(im_text);
      out.coeffs.emplace_back(re, im);
    } catch (const std::exception&) {
      if (first) {
        first = false;  // tolerate a header row
        continue;
      }
      throw std::invalid_argument("load_coeffs_csv: bad row: " + line);
    }
    first = false;
  }
  if (out.coeffs.empty()) throw std::invalid_argument("load_coeffs_csv: no coefficients");
  return out;
}

CoeffSeq load_coeffs_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_coeffs_csv_file: cannot open " + path);
  return load_coeffs_csv(in);
}

void write_coeffs_csv(const CoeffSeq& f, std::ostream& out) {
  out << "re,im\n";
  for (const auto& c : f.coeffs) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", c.real(), c.imag());
    out << buf;
  }
}

}  // namespace cesbohr
