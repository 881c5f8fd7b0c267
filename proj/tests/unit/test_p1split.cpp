#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "linecong/p1split.hpp"
#include "linecong/p1split_oracle.hpp"

using namespace linecong;

namespace {

SplitBundle sb(std::vector<std::int64_t> t) { return SplitBundle(std::move(t)); }

std::int64_t h0_split(const SplitResult& r, std::int64_t m) {
  std::int64_t s = r.torsion;
  for (auto b : r.bundle.twists()) s += std::max<std::int64_t>(0, b + m + 1);
  return s;
}

}  // namespace

TEST_CASE("binary forms") {
  const BinaryForm f = BinaryForm::parse("x^2 - 3xy + 2y^2", 2);
  CHECK(f.degree == 2);
  CHECK(f == BinaryForm::parse("(x-y)(x-2y)", 2));
  CHECK(exact_divide(f, BinaryForm::parse("x-y", 1)) == BinaryForm::parse("x - 2y", 1));
  CHECK_THROWS_AS(exact_divide(f, BinaryForm::parse("x+y", 1)), std::domain_error);
  CHECK(BinaryForm::parse("x^2y", 3).x_multiplicity() == 2);
  CHECK(BinaryForm::parse("0", 4).is_zero());
  CHECK(BinaryForm::parse(f.to_string(), 2) == f);
  CHECK_THROWS_AS(BinaryForm::parse("x + y^2", 2), std::invalid_argument);
  CHECK_THROWS_AS(BinaryForm::parse("x", 2), std::invalid_argument);
  CHECK_THROWS_AS(BinaryForm::parse("z", 1), std::invalid_argument);
}

TEST_CASE("form vector parsing") {
  const FormVector v = FormVector::parse(" O(0)->O(1):x ,O(1): y, O(2):x^2 ");
  CHECK(v.source_twist == 0);
  CHECK(v.targets.size() == 3);
  CHECK(v.target_degree() == 4);
  CHECK(FormVector::parse(v.to_string()).to_string() == v.to_string());
  CHECK_THROWS_AS(FormVector::parse("O(0) -> O(2):x"), std::invalid_argument);
  CHECK_THROWS_AS(FormVector::parse("O(0) O(1):x"), std::invalid_argument);
  CHECK_THROWS_AS(FormVector::parse("O(0) ->"), std::invalid_argument);
  CHECK(FormVector::parse("O(0) -> O(1):0, O(2):0").is_zero());
}

TEST_CASE("split bundle printing and order") {
  CHECK(sb({1, 3, 2, 2}).to_string() == "O(3) + O(2)^2 + O(1)");
  CHECK(sb({}).to_string() == "0");
  CHECK(sb({1, 3}) == sb({3, 1}));
  CHECK(sb({3, 1}).degree() == 4);
  CHECK(more_balanced(sb({2, 2}), sb({3, 1})));
  CHECK_FALSE(more_balanced(sb({3, 1}), sb({2, 2})));
  CHECK(more_balanced(sb({2, 2}), sb({2, 2})));
}

TEST_CASE("h0 of twists") {
  CHECK(h0_twist(FormVector::parse("O(0) -> O(1):x, O(1):y"), 0) == 3);
  // Torsion of length 2 keeps its sections at every twist.
  CHECK(h0_twist(FormVector::parse("O(0) -> O(2):x^2"), -3) == 2);
  CHECK(h0_twist(FormVector::parse("O(0) -> O(1):x, O(1):y, O(2):0, O(2):0"), 0) == 9);
  CHECK_THROWS_AS(h0_twist(FormVector::parse("O(0) -> O(1):0"), 0), std::invalid_argument);
}

TEST_CASE("splitting types") {
  CHECK(splitting_type(FormVector::parse("O(0) -> O(1):x, O(1):y")).to_string() == "O(2)");
  const SplitResult tors = splitting_type(FormVector::parse("O(0) -> O(1):x"));
  CHECK(tors.torsion == 1);
  CHECK(tors.bundle.rank() == 0);
  const SplitResult two = splitting_type(FormVector::parse("O(0) -> O(1):x, O(1):x"));
  CHECK(two.torsion == 1);
  CHECK(two.bundle == sb({1}));
  const SplitResult mixed = splitting_type(FormVector::parse("O(0) -> O(1):x, O(1):y, O(2):x^2"));
  CHECK(mixed.bundle.rank() == 2);
  CHECK(mixed.bundle.degree() == 4);
  CHECK(mixed == oracle_splitting_type(FormVector::parse("O(0) -> O(1):x, O(1):y, O(2):x^2")));
  CHECK(common_divisor(FormVector::parse("O(0) -> O(2):x^2, O(2):xy")) == BinaryForm::parse("x", 1));
  for (int n = 4; n <= 9; ++n) {
    std::vector<std::int64_t> want(static_cast<std::size_t>(n - 2), 2);
    want.push_back(1);
    CHECK(splitting_type(case12_map(n)).bundle == sb(want));
  }
}

TEST_CASE("strata") {
  for (int n = 4; n <= 8; ++n) {
    const auto strata = strata_enumerate(n);
    REQUIRE(strata.size() == 3);
    std::vector<std::int64_t> gen(static_cast<std::size_t>(n - 1), 2);
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n - 3), 2);
    deg.push_back(3);
    deg.push_back(1);
    CHECK(strata[0].splitting->bundle == sb(gen));
    CHECK(strata[1].splitting->bundle == sb(deg));
    CHECK(strata[2].contradiction);
    CHECK_FALSE(strata[2].splitting.has_value());
    for (int i = 0; i < 2; ++i) {
      CHECK(strata[i].splitting->bundle.rank() == n - 1);
      CHECK(strata[i].splitting->bundle.degree() == 2 * (n - 1));
      CHECK(classify_stratum(strata[i].representative) == strata[i].stratum);
    }
    CHECK(more_balanced(sb(gen), sb(deg)));
    CHECK_FALSE(more_balanced(sb(deg), sb(gen)));
  }
  CHECK_THROWS_AS(strata_enumerate(3), std::invalid_argument);
}

TEST_CASE("genericity recheck") {
  for (int n = 4; n <= 6; ++n)
    for (Stratum s : {Stratum::injective, Stratum::zero_on_one_factor})
      CHECK(genericity_recheck(n, s, 1729, 10).ok());
}

TEST_CASE("engine agrees with the syzygy oracle on random maps") {
  int mismatches = 0;
  for (const FormVector& v : oracle_suite(4242, 200)) {
    const SplitResult e = splitting_type(v);
    if (!(e == oracle_splitting_type(v))) ++mismatches;
    // Conservation.
    std::int64_t sum = 0;
    for (const auto& t : v.targets) sum += t.twist;
    CHECK(e.bundle.rank() == static_cast<std::int64_t>(v.targets.size()) - 1);
    CHECK(e.bundle.degree() + e.torsion == sum - v.source_twist);
  }
  CHECK(mismatches == 0);
}

TEST_CASE("h0 is the Hilbert function of the splitting type") {
  for (const FormVector& v : oracle_suite(99, 60)) {
    const SplitResult r = splitting_type(v);
    std::int64_t prev = -1;
    for (std::int64_t m = -8; m <= 8; ++m) {
      const std::int64_t h = h0_twist(v, m);
      CHECK(h == h0_split(r, m));
      CHECK(h >= prev);
      prev = h;
    }
    const std::int64_t m = 20;
    CHECK(h0_twist(v, m) == r.bundle.rank() * m + r.bundle.degree() + r.bundle.rank() + r.torsion);
  }
}

TEST_CASE("restricted cotangent bookkeeping") {
  const CotangentDecomposition c = restricted_cotangent_decomposition(4, 3);
  CHECK(c.summands.size() == 3);
  CHECK(c.total_c1 == 9);
  CHECK(c.consistent);
  CHECK(c.normalized_rank2_degree == 1);
  CHECK(c.ruled_invariant == -1);
  CHECK_FALSE(c.note.empty());
  const CotangentDecomposition c3 = restricted_cotangent_decomposition(3, 5);
  CHECK(c3.summands.size() == 2);
  CHECK(c3.summands[0] == RankDegree{1, 5});
  CHECK(c3.summands[1] == RankDegree{2, 5});
  CHECK_THROWS_AS(restricted_cotangent_decomposition(2, 3), std::invalid_argument);
}
