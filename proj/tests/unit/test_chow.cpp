#include <doctest.h>

#include <random>
#include <stdexcept>

#include "linecong/chow.hpp"
#include "oracles/numeric_ring.hpp"

using namespace linecong;

namespace {

ChowElement P(int n, long k = 1) { return ChowElement::curve(n, ParamPoly(k) * CurveClass::point()); }
ChowElement L(int n) { return ChowElement::curve(n, CurveClass::hyperplane()); }

// Random element built from t, L, K, D, P with small integer coefficients,
// together with its image in the numeric oracle at (d, g, D).
struct Sample {
  ChowElement x;
  oracle::NumRing::Elt y;
};

Sample random_element(std::mt19937_64& rng, int n, const oracle::NumRing& ring, long d, long g, long D) {
  Sample s{ChowElement(n), {}};
  auto coeff = [&] { return static_cast<long>(rng() % 7) - 3; };
  for (int k = 0; k <= n; ++k) {
    const long a = k == 0 ? coeff() : (rng() % 2 ? coeff() : 0);
    const long cl = coeff(), ck = coeff(), cd = coeff(), cp = coeff();
    const CurveClass beta = k == 0 ? CurveClass{} : CurveClass{cl, ck, cd, cp};
    s.x += ChowElement::homogeneous(n, k, a, beta);
    auto term = ring.mul(ring.scalar(a), ring.pow(ring.t(), k));
    if (k > 0) {
      const long deg = cl * d + ck * (2 * g - 2) + cd * D + cp;
      term = ring.add(term, ring.mul(ring.pt(deg), ring.pow(ring.t(), k - 1)));
    }
    s.y = ring.add(s.y, term);
  }
  return s;
}

bool matches_oracle(const ChowElement& x, const oracle::NumRing::Elt& y, const oracle::NumRing& ring,
                    const ParamValues& at) {
  const ChowElement v = x.evaluated(at).numerical();
  for (int k = 0; k <= x.ambient_dim(); ++k) {
    const auto [tk, ptk] = ring.part(y, k);
    if (v.t_coeff(k).evaluate(at) != tk) return false;
    if (k > 0 && v.curve_coeff(k).P.evaluate(at) != ptk) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("top relation t^n = (n-1) L t^{n-1}") {
  const int n = 3;
  const ChowElement t = ChowElement::t(n);
  CHECK((t * t.pow(2)).integrate() == 2 * sym::d());
  CHECK((t * t.pow(2)) == ChowElement::homogeneous(n, 3, 0, ParamPoly(2) * CurveClass::hyperplane()));
  CHECK(ChowElement::t(5).pow(5).integrate() == 4 * sym::d());
  for (int m = 3; m <= 12; ++m) CHECK(ChowElement::t(m).pow(static_cast<unsigned>(m)).integrate() == (m - 1) * sym::d());
}

TEST_CASE("curve classes square to zero") {
  CHECK((P(4) * P(4)).is_zero());
  CHECK((L(4) * ChowElement::curve(4, CurveClass::canonical())).is_zero());
}

TEST_CASE("binomial with L^2 = 0") {
  const int n = 4;
  const ChowElement t = ChowElement::t(n);
  const ChowElement x = (t - L(n)).pow(2);
  CHECK(x == ChowElement::homogeneous(n, 2, 1, ParamPoly(-2) * CurveClass::hyperplane()));
  CHECK(x.numerical().evaluated(ParamValues{3, 0, 0, 0}) ==
        ChowElement::homogeneous(n, 2, 1, ParamPoly(-6) * CurveClass::point()));
}

TEST_CASE("integration and point normalization") {
  for (int n = 3; n <= 8; ++n) {
    const ChowElement t = ChowElement::t(n);
    CHECK((L(n) * t.pow(static_cast<unsigned>(n - 1))).integrate() == sym::d());
    CHECK((P(n) * t.pow(static_cast<unsigned>(n - 1))).integrate() == 1);
    CHECK(t.pow(static_cast<unsigned>(n - 1)).integrate().is_zero());
  }
}

TEST_CASE("degree_of") {
  CHECK(degree_of(CurveClass::hyperplane() - ParamPoly(2) * CurveClass::point()) == sym::d() - 2);
  CHECK(degree_of(CurveClass{}).is_zero());
  CHECK(degree_of(ParamPoly(2) * CurveClass::point() - CurveClass::twisting()) == 2 - sym::D());
  CHECK(degree_of(CurveClass::canonical()) == 2 * sym::g() - 2);
}

TEST_CASE("structure queries") {
  const int n = 4;
  const ChowElement x = ChowElement::t(n) + P(n, 3) + ChowElement::t(n).pow(3);
  CHECK(x.lowest_codim() == 1);
  CHECK_FALSE(x.is_homogeneous(1));
  CHECK(x.part(3) == ChowElement::t(n).pow(3));
  CHECK(ChowElement(n).lowest_codim() == -1);
  CHECK(ChowElement::one(n).is_homogeneous(0));
}

TEST_CASE("mixing ambient dimensions throws") {
  CHECK_THROWS_AS(ChowElement::t(3) * ChowElement::t(4), std::invalid_argument);
  CHECK_THROWS_AS(ChowElement::t(3) + ChowElement::t(4), std::invalid_argument);
}

TEST_CASE("ring axioms on 100 seeded triples, symbolic") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + static_cast<int>(rng() % 5);
    oracle::NumRing ring(n, 1);
    const ChowElement x = random_element(rng, n, ring, 1, 1, 1).x;
    const ChowElement y = random_element(rng, n, ring, 1, 1, 1).x;
    const ChowElement z = random_element(rng, n, ring, 1, 1, 1).x;
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("products agree with the numeric oracle ring") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const long d = 1 + static_cast<long>(rng() % 6), g = static_cast<long>(rng() % 5), D = static_cast<long>(rng() % 7);
    const ParamValues at{d, g, 0, D};
    oracle::NumRing ring(n, d);
    const Sample a = random_element(rng, n, ring, d, g, D);
    const Sample b = random_element(rng, n, ring, d, g, D);
    CHECK(matches_oracle(a.x * b.x, ring.mul(a.y, b.y), ring, at));
    CHECK((a.x * b.x).integrate().evaluate(at) == ring.integrate(ring.mul(a.y, b.y)));
  }
}
