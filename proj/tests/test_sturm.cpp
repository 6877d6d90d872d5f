#include "cesbohr/sturm.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include <doctest.h>

using namespace cesbohr::sturm;

namespace {

const char* kFCoeffs = "39 -45 -7 43 13 -11 3 -3";
const char* kQuinticCoeffs = "8 8 -3 -17 11 9";

// Independent exact remainder-sequence oracle: long division written against
// a map-free dense representation, structured differently from the library.
std::vector<Rational> oracle_rem(std::vector<Rational> num, const std::vector<Rational>& den) {
  while (num.size() >= den.size()) {
    const Rational lead = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= lead * den[j];
    while (!num.empty() && num.back() == 0) num.pop_back();
  }
  return num;
}

std::vector<std::vector<Rational>> oracle_chain(std::vector<Rational> p) {
  std::vector<std::vector<Rational>> out;
  out.push_back(p);
  std::vector<Rational> d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(Rational(static_cast<long>(j)) * p[j]);
  out.push_back(d);
  while (out.back().size() > 1) {
    std::vector<Rational> rem = oracle_rem(out[out.size() - 2], out.back());
    if (rem.empty()) break;
    for (auto& c : rem) c = -c;
    out.push_back(std::move(rem));
  }
  return out;
}

std::vector<Rational> poly_mul_exact(const std::vector<Rational>& p,
                                     const std::vector<Rational>& q) {
  std::vector<Rational> out(p.size() + q.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

}  // namespace

TEST_CASE("chain on simple polynomials") {
  const RationalPoly p = RationalPoly::parse("x^2 - 1");
  const SturmChain c = chain(p);
  REQUIRE(c.polys.size() == 3);
  CHECK(c.polys[0] == p);
  CHECK(c.polys[1] == RationalPoly::from_coeff_list("0 2"));
  CHECK(c.polys[2] == RationalPoly::from_coeff_list("1"));

  // square-free reduction first: x^2 collapses to x
  const SturmChain sq = chain(RationalPoly::parse("x^2"));
  REQUIRE(sq.polys.size() == 2);
  CHECK(sq.polys[0] == RationalPoly::from_coeff_list("0 1"));
  CHECK(sq.polys[1] == RationalPoly::from_coeff_list("1"));
}

TEST_CASE("chain for F matches an independent remainder-sequence computation") {
  const RationalPoly F = RationalPoly::from_coeff_list(kFCoeffs);
  const SturmChain c = chain(F);
  CHECK(c.polys.size() <= 8);
  CHECK(c.polys.back().degree() == 0);

  const auto expected = oracle_chain(F.coefficients());
  REQUIRE(c.polys.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(c.polys[i] == RationalPoly(expected[i]));
  }
}

TEST_CASE("count_roots reproduces the certificates") {
  const RationalPoly F = RationalPoly::from_coeff_list(kFCoeffs);
  CHECK(count_roots(F, Rational(0), Rational(1)) == 0);
  CHECK(count_roots(F, Rational(1), Rational(2)) == 1);

  const RationalPoly quintic = RationalPoly::from_coeff_list(kQuinticCoeffs);
  CHECK(count_roots(quintic, Rational(0), Rational(1'000'000)) == 0);

  CHECK(count_roots(RationalPoly::parse("x^2 - 1"), Rational(0), Rational(2)) == 1);
}

TEST_CASE("half-open interval semantics (a, b]") {
  // roots of x(x-1) at 0 and 1
  const RationalPoly p = RationalPoly::parse("x^2 - x");
  CHECK(count_roots(p, Rational(0), Rational(1)) == 1);   // 0 excluded, 1 included
  CHECK(count_roots(p, Rational(-1), Rational(0)) == 1);  // 0 included
  CHECK(count_roots(p, Rational(-1), Rational(1)) == 2);
  CHECK(count_roots(p, Rational(1, 2), Rational(2)) == 1);

  // symmetric roots at -1/2 and 1/2
  const RationalPoly q = RationalPoly::from_coeff_list("-1/4 0 1");
  CHECK(count_roots(q, Rational(-1), Rational(0)) == 1);
  CHECK(count_roots(q, Rational(-1), Rational(-1, 2)) == 1);  // endpoint root at b counted
  CHECK(count_roots(q, Rational(-1, 2), Rational(0)) == 0);   // endpoint root at a excluded
}

TEST_CASE("eval_exact") {
  const RationalPoly F = RationalPoly::from_coeff_list(kFCoeffs);
  CHECK(eval_exact(F, Rational(1)) == 32);
  CHECK(eval_exact(F, Rational(2)) == -71);
  CHECK(eval_exact(F, Rational(0)) == 39);
  CHECK(eval_exact(F, Rational(1, 2)) == Rational(2639, 128));

  const RationalPoly any = RationalPoly::parse("7 - 2r + r^3");
  CHECK(eval_exact(any, Rational(0)) == 7);
  CHECK(eval_exact(any, Rational(-1, 3)) == Rational(7) + Rational(2, 3) - Rational(1, 27));
}

TEST_CASE("planted rational roots are counted exactly") {
  std::mt19937_64 rng(23);
  const auto pick = [&rng](int n) { return static_cast<int>(rng() % n); };

  for (int trial = 0; trial < 60; ++trial) {
    // up to 4 distinct roots at k/4, k in [-8, 8], multiplicities 1..2, degree <= 8
    std::vector<Rational> root_pool;
    for (int k = -8; k <= 8; ++k) root_pool.emplace_back(k, 4);
    std::shuffle(root_pool.begin(), root_pool.end(), rng);

    const int distinct = 1 + pick(4);
    std::vector<Rational> roots(root_pool.begin(), root_pool.begin() + distinct);
    std::vector<Rational> poly{Rational(1 + pick(3)) * (pick(2) ? 1 : -1)};
    int degree = 0;
    for (const Rational& root : roots) {
      const int mult = 1 + pick(2);
      for (int j = 0; j < mult && degree < 8; ++j) {
        poly = poly_mul_exact(poly, {-root, Rational(1)});
        ++degree;
      }
    }

    // interval endpoints offset by 1/8 so they are never planted roots
    const Rational a = Rational(-3) + Rational(1, 8);
    const Rational b = Rational(pick(5)) + Rational(1, 8);
    if (!(a < b)) continue;
    int expected = 0;
    for (std::size_t i = 0; i < roots.size() && static_cast<int>(i) < distinct; ++i) {
      if (a < roots[i] && roots[i] <= b) ++expected;
    }
    CHECK(count_roots(RationalPoly(poly), a, b) == expected);
  }
}

TEST_CASE("chain signs are exactly reproducible") {
  const RationalPoly F = RationalPoly::from_coeff_list(kFCoeffs);
  const SturmChain first = chain(F);
  const SturmChain second = chain(F);
  for (const Rational& x : {Rational(0), Rational(1, 3), Rational(1), Rational(3, 2), Rational(2)}) {
    CHECK(sign_variations(first, x) == sign_variations(second, x));
    for (std::size_t i = 0; i < first.polys.size(); ++i) {
      CHECK(sgn(first.polys[i].eval(x)) == sgn(second.polys[i].eval(x)));
    }
  }
}

TEST_CASE("intervals reported root-free have one-signed floating-point samples") {
  const RationalPoly F = RationalPoly::from_coeff_list(kFCoeffs);
  REQUIRE(count_roots(F, Rational(0), Rational(1)) == 0);
  for (int i = 0; i < 10000; ++i) {
    const double r = (i + 1) / 10000.0;
    double value = 0.0;
    for (int j = F.degree(); j >= 0; --j)
      value = value * r + F.coefficients()[j].get_d();
    CHECK(value > 0.0);
  }

  const RationalPoly quintic = RationalPoly::from_coeff_list(kQuinticCoeffs);
  REQUIRE(count_roots(quintic, Rational(0), Rational(100)) == 0);
  for (int i = 0; i < 10000; ++i) {
    const double r = 100.0 * (i + 1) / 10000.0;
    double value = 0.0;
    for (int j = quintic.degree(); j >= 0; --j)
      value = value * r + quintic.coefficients()[j].get_d();
    CHECK(value > 0.0);
  }
}

TEST_CASE("parsing: coefficient lists, human-readable form, fractions") {
  const RationalPoly from_list = RationalPoly::from_coeff_list(kFCoeffs);
  const RationalPoly from_text =
      RationalPoly::parse("39 - 45r - 7r^2 + 43r^3 + 13r^4 - 11r^5 + 3r^6 - 3r^7");
  CHECK(from_list == from_text);

  CHECK(RationalPoly::parse("8 + 8r - 3r^2 - 17r^3 + 11r^4 + 9r^5") ==
        RationalPoly::from_coeff_list(kQuinticCoeffs));

  const RationalPoly frac = RationalPoly::from_coeff_list("1/2 -3/4 0 2");
  CHECK(frac.coefficients()[0] == Rational(1, 2));
  CHECK(frac.coefficients()[1] == Rational(-3, 4));
  CHECK(frac.degree() == 3);

  CHECK(RationalPoly::parse("x^2 - 1") == RationalPoly::from_coeff_list("-1 0 1"));
  CHECK(RationalPoly::parse("-r + r^3") == RationalPoly::from_coeff_list("0 -1 0 1"));
  CHECK(RationalPoly::parse("2*x") == RationalPoly::from_coeff_list("0 2"));

  // to_string round trip
  for (const char* text : {kFCoeffs, kQuinticCoeffs, "0 -1 0 1", "1/2 -3/4 0 2"}) {
    const RationalPoly p = RationalPoly::from_coeff_list(text);
    CHECK(RationalPoly::parse(p.to_string()) == p);
  }

  CHECK_THROWS_AS(RationalPoly::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(RationalPoly::parse("3r^"), std::invalid_argument);
  CHECK_THROWS_AS(RationalPoly::parse("3 4"), std::invalid_argument);
  CHECK_THROWS_AS(RationalPoly::from_coeff_list("abc"), std::invalid_argument);
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(chain(RationalPoly{}), ZeroPolynomialError);
  CHECK_THROWS_AS(count_roots(RationalPoly{}, Rational(0), Rational(1)), ZeroPolynomialError);
  CHECK_THROWS_AS(count_roots(RationalPoly::parse("x"), Rational(1), Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(RationalPoly{}.leading(), ZeroPolynomialError);

  // constant polynomial: no roots anywhere
  CHECK(count_roots(RationalPoly::from_coeff_list("5"), Rational(-10), Rational(10)) == 0);
}
