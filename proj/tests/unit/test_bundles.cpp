#include <doctest.h>

#include <random>
#include <stdexcept>

#include "linecong/bundles.hpp"
#include "oracles/numeric_ring.hpp"

using namespace linecong;

namespace {

ChowElement L(int n) { return ChowElement::curve(n, CurveClass::hyperplane()); }
ChowElement K(int n) { return ChowElement::curve(n, CurveClass::canonical()); }
ChowElement Dc(int n) { return ChowElement::curve(n, CurveClass::twisting()); }

ChowElement random_positive_part(std::mt19937_64& rng, int n) {
  ChowElement x(n);
  for (int k = 1; k <= n; ++k) {
    const long a = static_cast<long>(rng() % 7) - 3;
    const CurveClass beta{static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2,
                          static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2};
    x += ChowElement::homogeneous(n, k, a * (sym::e() + 1), beta);
  }
  return x;
}

}  // namespace

TEST_CASE("line bundles") {
  const int n = 4;
  const ChowElement t = ChowElement::t(n);
  CHECK(BundleClass::line(t - L(n)).total_chern() == ChowElement::one(n) + t - L(n));
  CHECK(BundleClass::line(ChowElement(n)).total_chern() == ChowElement::one(n));
  const ChowElement y = sym::e() * t - Dc(n);
  CHECK(BundleClass::line(y).total_chern() == ChowElement::one(n) + y);
  CHECK_THROWS_AS(BundleClass::line(t * t), std::invalid_argument);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(BundleClass(-1, ChowElement::one(3)), std::invalid_argument);
  CHECK_THROWS_AS(BundleClass(1, ChowElement::t(3)), std::invalid_argument);
  CHECK(BundleClass::trivial(3, 2).rank() == 2);
  CHECK(BundleClass::trivial(3).chern(5).is_zero());
  CHECK(BundleClass::trivial(3).chern(-1).is_zero());
}

TEST_CASE("whitney sums") {
  const int n = 5;
  const ChowElement t = ChowElement::t(n);
  const BundleClass f = whitney(BundleClass::line(t - L(n)), BundleClass::line(L(n)));
  CHECK(f.rank() == 2);
  CHECK(f.total_chern() == ChowElement::one(n) + t + L(n) * t);
  const BundleClass x = BundleClass::line(t - L(n));
  CHECK(whitney(x, BundleClass::trivial(n)).total_chern() == x.total_chern());
  CHECK(whitney_power(x, n - 2).total_chern() == x.total_chern().pow(static_cast<unsigned>(n - 2)));
  CHECK(whitney_power(x, n - 2).rank() == n - 2);
  // Delta_1 of a sum of two lines is c1(A) + c1(B).
  const BundleClass a = BundleClass::line(t + K(n)), b = BundleClass::line(2 * t - Dc(n));
  CHECK(schur_delta1(1, whitney(a, b)) == a.chern(1) + b.chern(1));
}

TEST_CASE("chern inverse") {
  CHECK(chern_inverse(ChowElement::one(3) - K(3)) == ChowElement::one(3) + K(3));
  const int n = 3;
  const ChowElement t = ChowElement::t(n);
  const ChowElement inv = chern_inverse(ChowElement::one(n) + 2 * L(n) - t);
  const ChowElement low = ChowElement::one(n) - 2 * L(n) + t + t * t - 4 * L(n) * t;
  for (int k = 0; k <= 2; ++k) CHECK(inv.part(k) == low.part(k));
  // The codimension-3 term: (2L - t)^3 = -t^3 + 6Lt^2 = 4Lt^2.
  CHECK(inv.part(3) == -4 * L(n) * t * t);
  CHECK(inv.part(3).integrate() == -4 * sym::d());
}

TEST_CASE("chern inverse is two-sided on random classes") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const ChowElement c = ChowElement::one(n) + random_positive_part(rng, n);
    const ChowElement inv = chern_inverse(c);
    CHECK(c * inv == ChowElement::one(n));
    CHECK(inv * c == ChowElement::one(n));
  }
}

TEST_CASE("Schur determinant of the push-out bundle") {
  for (int n = 3; n <= 10; ++n) {
    const ChowElement t = ChowElement::t(n);
    const BundleClass f(2, ChowElement::one(n) + t + L(n) * t);
    CHECK(schur_delta1(1, f) == t);
    for (int i = 1; i <= n - 1; ++i) {
      const ChowElement want = ChowElement::homogeneous(n, i, 1, ParamPoly(-(i - 1)) * CurveClass::hyperplane());
      CHECK(schur_delta1(i, f) == want);
      CHECK(schur_delta1_recursive(i, f) == want);
    }
    CHECK(schur_delta1(1, BundleClass::trivial(n, 2)).is_zero());
    CHECK(schur_delta1(n - 1, BundleClass::trivial(n, 2)).is_zero());
    CHECK_THROWS_AS(schur_delta1(0, f), std::out_of_range);
    CHECK_THROWS_AS(schur_delta1(n, f), std::out_of_range);
  }
}

TEST_CASE("Schur determinant agrees with a Leibniz expansion in the oracle ring") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const long d = 1 + static_cast<long>(rng() % 5);
    const long a1 = static_cast<long>(rng() % 5) - 2, b1 = static_cast<long>(rng() % 5) - 2;
    const long a2 = static_cast<long>(rng() % 5) - 2, b2 = static_cast<long>(rng() % 5) - 2;
    // Two line bundles with c1 = a t + b P.
    const ChowElement t = ChowElement::t(n);
    auto pc = [&](long b) { return ChowElement::curve(n, ParamPoly(b) * CurveClass::point()); };
    const BundleClass e = whitney(BundleClass::line(a1 * t + pc(b1)), BundleClass::line(a2 * t + pc(b2)));

    oracle::NumRing ring(n, d);
    const auto one = ring.scalar(1);
    const auto l1 = ring.add(ring.mul(ring.scalar(a1), ring.t()), ring.pt(b1));
    const auto l2 = ring.add(ring.mul(ring.scalar(a2), ring.t()), ring.pt(b2));
    const auto total = ring.mul(ring.add(one, l1), ring.add(one, l2));
    std::vector<oracle::NumRing::Elt> c;
    for (int k = 0; k <= n; ++k) c.push_back(ring.codim(total, k));

    const ParamValues at{d, 0, 0, 0};
    for (int q = 1; q <= n - 1; ++q) {
      const ChowElement got = schur_delta1(q, e).evaluated(at).numerical();
      const auto want = oracle::delta1_leibniz(ring, c, q);
      const auto [tk, ptk] = ring.part(want, q);
      CHECK(got.t_coeff(q).evaluate(at) == tk);
      CHECK(got.curve_coeff(q).P.evaluate(at) == ptk);
    }
  }
}

TEST_CASE("determinant of a triangular matrix is the diagonal product") {
  const int n = 4;
  const ChowElement t = ChowElement::t(n);
  std::vector<std::vector<ChowElement>> m(3, std::vector<ChowElement>(3, ChowElement(n)));
  m[0][0] = ChowElement::one(n) + t;
  m[1][1] = t;
  m[2][2] = t + L(n);
  m[0][2] = L(n);
  CHECK(determinant(m) == m[0][0] * m[1][1] * m[2][2]);
  CHECK_THROWS(determinant({}));
}

TEST_CASE("curve bookkeeping") {
  CHECK(euler_char(3, 0, 1) == 0);
  CHECK(euler_char(1, 0, 0) == 1);
  CHECK(euler_char(2, 1, 1) == 1);
  CHECK(sym2_rank2(1) == RankDegree{3, 3});
  CHECK(sym2_rank2(0) == RankDegree{3, 0});
  CHECK(twist(sym2_rank2(1), -1) == RankDegree{3, 0});
}
