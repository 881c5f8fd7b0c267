#include <doctest.h>

#include <random>
#include <stdexcept>

#include "linecong/param_poly.hpp"

using namespace linecong;

namespace {

ParamValues at(long d, long g, long e, long D) {
  ParamValues v;
  v.d = d;
  v.g = g;
  v.e = e;
  v.D = D;
  return v;
}

ParamPoly random_poly(std::mt19937_64& rng) {
  ParamPoly p;
  const int terms = static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i) {
    Exponents ex{};
    for (auto& x : ex) x = static_cast<std::uint32_t>(rng() % 3);
    p += ParamPoly::monomial(ex, static_cast<long>(rng() % 15) - 7);
  }
  return p;
}

}  // namespace

TEST_CASE("monomial product and evaluation") {
  const ParamPoly de = sym::d() * sym::e();
  CHECK(de * de == ParamPoly::parse("d^2 e^2"));
  CHECK(ParamPoly::parse("2d^2e^2 - 4de^2").evaluate(at(3, 0, 2, 0)) == 24);
  CHECK(ParamPoly::parse("D(1+2e-2de)").evaluate(at(3, 0, 2, 3)) == -21);
}

TEST_CASE("parse handles juxtaposition, powers and parentheses") {
  CHECK(ParamPoly::parse("(d-1)(d-2)") == sym::d() * sym::d() - 3 * sym::d() + 2);
  CHECK(ParamPoly::parse("2*d*e^2") == ParamPoly::parse("2de^2"));
  CHECK(ParamPoly::parse("-(e+1)") == -(sym::e() + 1));
  CHECK(ParamPoly::parse("0").is_zero());
  CHECK(ParamPoly::parse("e(e+1)(2g-2)").evaluate(at(0, 1, 2, 0)) == 0);
}

TEST_CASE("parse rejects garbage") {
  CHECK_THROWS_AS(ParamPoly::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ParamPoly::parse("d +"), std::invalid_argument);
  CHECK_THROWS_AS(ParamPoly::parse("(d"), std::invalid_argument);
  CHECK_THROWS_AS(ParamPoly::parse("q"), std::invalid_argument);
}

TEST_CASE("degrees and coefficients") {
  const ParamPoly p = ParamPoly::parse("3d^2e + 5e - 7");
  CHECK(p.degree_in(Symbol::d) == 2);
  CHECK(p.degree_in(Symbol::g) == 0);
  CHECK(p.total_degree() == 3);
  CHECK(p.coefficient(Symbol::d, 2) == 3 * sym::e());
  CHECK(p.coefficient(Symbol::d, 0) == 5 * sym::e() - 7);
  CHECK(p.constant_term() == -7);
  CHECK_FALSE(p.is_constant());
  CHECK(ParamPoly(4).is_constant());
}

TEST_CASE("substitution is exact or refuses") {
  // 2g with g = (d-1)(d-2)/2
  const ParamPoly twice_g = 2 * sym::g();
  CHECK(twice_g.substitute(Symbol::g, ParamPoly::parse("(d-1)(d-2)"), 2) == ParamPoly::parse("(d-1)(d-2)"));
  CHECK_THROWS_AS(sym::g().substitute(Symbol::g, sym::d(), 2), std::domain_error);
  CHECK(ParamPoly::parse("d^2 + g").substitute(Symbol::d, ParamPoly(3)) == 9 + sym::g());
  CHECK_THROWS_AS(ParamPoly(3).exact_divide(2), std::domain_error);
  CHECK(ParamPoly::parse("4d + 6").exact_divide(2) == ParamPoly::parse("2d + 3"));
}

TEST_CASE("to_string is canonical and parses back") {
  CHECK(ParamPoly().to_string() == "0");
  CHECK(ParamPoly::parse("ed - D").to_string() == "d*e - D");
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const ParamPoly p = random_poly(rng);
    CHECK(ParamPoly::parse(p.to_string()) == p);
  }
}

TEST_CASE("ring axioms and evaluation homomorphism on random polynomials") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const ParamPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    CHECK(p.pow(3) == p * p * p);
    const ParamValues v = at(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4,
                             static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4);
    CHECK((p * q + r).evaluate(v) == p.evaluate(v) * q.evaluate(v) + r.evaluate(v));
  }
}
