#include "cesbohr/sturm.hpp"

#include <cctype>
#include <sstream>

namespace cesbohr::sturm {

namespace {

int sign_of(const Rational& x) { return sgn(x); }

Rational parse_rational(const std::string& token) {
  // mpq_class accepts "num" and "num/den"; validate characters first so bad
  // input raises a std::invalid_argument rather than aborting inside GMP.
  if (token.empty()) throw std::invalid_argument("empty rational token");
  for (std::size_t i = 0; i < token.size(); ++i) {
    const char c = token[i];
    const bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                    ((c == '+' || c == '-') && (i == 0 || token[i - 1] == '/'));
    if (!ok) throw std::invalid_argument("bad rational token: " + token);
  }
  Rational value(token);
  value.canonicalize();
  return value;
}

}  // namespace

RationalPoly::RationalPoly(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RationalPoly::leading() const {
  if (is_zero()) throw ZeroPolynomialError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

RationalPoly RationalPoly::from_coeff_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Rational> coeffs;
  std::string token;
  while (in >> token) coeffs.push_back(parse_rational(token));
  return RationalPoly(std::move(coeffs));
}

RationalPoly RationalPoly::parse(std::string_view text) {
  // term := [sign] [coefficient] [var [^ exponent]]
  std::vector<Rational> coeffs;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto set_coeff = [&](std::size_t exp, const Rational& c) {
    if (coeffs.size() <= exp) coeffs.resize(exp + 1, Rational(0));
    coeffs[exp] += c;
  };

  skip_ws();
  bool any_term = false;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (any_term) {
      throw std::invalid_argument("polynomial parse: expected '+' or '-' near \"" +
                                  std::string(text.substr(i)) + "\"");
    }

    std::string number;
    while (i < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) {
      number += text[i++];
    }
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    }

    std::size_t exponent = 0;
    if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
      ++i;
      skip_ws();
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        std::string exp_text;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          exp_text += text[i++];
        if (exp_text.empty()) throw std::invalid_argument("polynomial parse: missing exponent");
        exponent = std::stoul(exp_text);
      }
    } else if (number.empty()) {
      throw std::invalid_argument("polynomial parse: empty term");
    }

    Rational coeff = number.empty() ? Rational(1) : parse_rational(number);
    if (sign < 0) coeff = -coeff;
    set_coeff(exponent, coeff);
    any_term = true;
    skip_ws();
  }
  if (!any_term) throw std::invalid_argument("polynomial parse: empty input");
  return RationalPoly(std::move(coeffs));
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return RationalPoly{};
  std::vector<Rational> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    out.push_back(Rational(static_cast<long>(j)) * coeffs_[j]);
  }
  return RationalPoly(std::move(out));
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string RationalPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    const Rational mag = abs(c);
    if (mag != 1 || j == 0) out << mag.get_str();
    if (j >= 1) {
      out << var;
      if (j >= 2) out << '^' << j;
    }
  }
  return out.str();
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const Rational& c, const RationalPoly& p) {
  if (c == 0) return RationalPoly{};
  std::vector<Rational> out;
  out.reserve(p.coeffs_.size());
  for (const auto& pc : p.coeffs_) out.push_back(c * pc);
  return RationalPoly(std::move(out));
}

RationalPoly poly_rem(const RationalPoly& num, const RationalPoly& den) {
  if (den.is_zero()) throw ZeroPolynomialError("poly_rem: division by the zero polynomial");
  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dn = d.size();
  while (rem.size() >= dn) {
    const Rational factor = rem.back() / d.back();
    const std::size_t shift = rem.size() - dn;
    for (std::size_t j = 0; j < dn; ++j) rem[shift + j] -= factor * d[j];
    rem.pop_back();  // leading term cancels exactly
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return RationalPoly(std::move(rem));
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rational(1) / a.leading()) * a;  // monic
}

SturmChain chain(const RationalPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("chain: zero polynomial");

  RationalPoly p0 = p;
  if (p.degree() >= 1) {
    const RationalPoly g = poly_gcd(p, p.derivative());
    if (g.degree() >= 1) {
      // Square-free reduction by exact division p / g.
      std::vector<Rational> quot(p.degree() - g.degree() + 1, Rational(0));
      std::vector<Rational> rem = p.coefficients();
      const auto& d = g.coefficients();
      while (rem.size() >= d.size()) {
        const Rational factor = rem.back() / d.back();
        const std::size_t shift = rem.size() - d.size();
        quot[shift] = factor;
        for (std::size_t j = 0; j < d.size(); ++j) rem[shift + j] -= factor * d[j];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
      }
      p0 = RationalPoly(std::move(quot));
    }
  }

  SturmChain out;
  out.polys.push_back(p0);
  if (p0.degree() >= 1) {
    out.polys.push_back(p0.derivative());
    while (out.polys.back().degree() >= 1) {
      RationalPoly next = -poly_rem(out.polys[out.polys.size() - 2], out.polys.back());
      if (next.is_zero()) break;  // gcd was constant, so this only ends at degree 0
      out.polys.push_back(std::move(next));
    }
  }
  return out;
}

int sign_variations(const SturmChain& c, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& poly : c.polys) {
    const int s = sign_of(poly.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int count_roots(const RationalPoly& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("count_roots: need a < b");
  const SturmChain c = chain(p);
  return sign_variations(c, a) - sign_variations(c, b);
}

}  // namespace cesbohr::sturm
