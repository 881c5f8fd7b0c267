#include <doctest.h>

#include <set>
#include <tuple>

#include "linecong/classify.hpp"

using namespace linecong;

namespace {

// Independent route: solve the plane relation as a quadratic in D,
//   D^2 - (2de - 2e - 1) D + de(d-1)(e-1) = 0.
std::set<std::pair<long, long>> quadratic_solutions(long e, long d_max) {
  std::set<std::pair<long, long>> out;
  for (long d = 1; d <= d_max; ++d) {
    const mpz_class p = 2 * d * e - 2 * e - 1;
    const mpz_class q = mpz_class(d) * e * (d - 1) * (e - 1);
    const mpz_class disc = p * p - 4 * q;
    if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
    const mpz_class root = sqrt(disc);
    for (const mpz_class twice : {mpz_class(p - root), mpz_class(p + root)}) {
      if (twice % 2 != 0) continue;
      const mpz_class D = twice / 2;
      if (D >= 0 && D <= e * d - 1) out.insert({d, D.get_si()});
    }
  }
  return out;
}

using Key = std::tuple<long, long, long>;

std::set<Key> survivor_keys(const std::vector<CongruenceSolution>& rows) {
  std::set<Key> out;
  for (const auto& r : survivors(rows)) out.insert({*r.e, *r.d, *r.D});
  return out;
}

}  // namespace

TEST_CASE("status names round trip") {
  for (auto s : {SolutionStatus::survives, SolutionStatus::eliminated, SolutionStatus::delegated})
    CHECK(parse_status(status_name(s)) == s);
  CHECK_THROWS_AS(parse_status("alive"), std::invalid_argument);
}

TEST_CASE("genus from the relation") {
  CHECK(genus_from_relation(3, 2, 3) == 1);
  CHECK(genus_from_relation(2, 1, 0) == 0);
  CHECK(genus_from_relation(3, 1, 0) == 1);
  CHECK_THROWS_AS(genus_from_relation(3, 0, 0), std::invalid_argument);
}

TEST_CASE("Castelnuovo bound") {
  CHECK(castelnuovo_bound(3, 3) == 0);
  CHECK(castelnuovo_bound(4, 3) == 1);
  CHECK(castelnuovo_bound(5, 3) == 2);
  CHECK(castelnuovo_bound(6, 3) == 4);
  CHECK(castelnuovo_bound(5, 4) == 1);
  CHECK(castelnuovo_bound(5, 2) == 6);
  CHECK_THROWS_AS(castelnuovo_bound(0, 3), std::invalid_argument);
}

TEST_CASE("plane relation membership") {
  CHECK(satisfies_plane_relation(3, 2, 3));
  CHECK(satisfies_plane_relation(2, 1, 0));
  CHECK(satisfies_plane_relation(3, 1, 0));
  CHECK_FALSE(satisfies_plane_relation(4, 2, 0));
}

TEST_CASE("enumeration matches the quadratic-formula oracle") {
  for (long e = 1; e <= 3; ++e) {
    std::set<std::pair<long, long>> got;
    for (const auto& r : enumerate_solutions(e, 50)) got.insert({*r.d, *r.D});
    CHECK(got == quadratic_solutions(e, 50));
  }
  CHECK_THROWS_AS(enumerate_solutions(4, 50), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_solutions(0, 50), std::invalid_argument);
}

TEST_CASE("four survivors") {
  const auto rows = classification_table(50);
  CHECK(rows.size() == 69);
  const std::set<Key> want{{1, 2, 0}, {1, 2, 1}, {1, 3, 0}, {2, 3, 3}};
  CHECK(survivor_keys(rows) == want);
  for (const auto& r : survivors(rows)) CHECK(r.reason != reason::kUnexplained);
  CHECK(rows[0].status == SolutionStatus::delegated);
  CHECK(rows[1].status == SolutionStatus::delegated);
  CHECK_FALSE(rows[0].e.has_value());
}

TEST_CASE("every row reports a bidegree consistent with its data") {
  for (const auto& r : classification_table(50)) {
    if (!r.e) continue;
    CHECK(*r.a == *r.e * *r.d - *r.D);
    CHECK(*r.b == *r.e * *r.d);
    CHECK(2 * *r.g == (*r.d - 1) * (*r.d - 2));
    CHECK(satisfies_plane_relation(*r.d, *r.e, *r.D));
    CHECK_FALSE(r.reason.empty());
    CHECK_FALSE(r.anchor.empty());
  }
}

TEST_CASE("enlarging the search leaves the survivors unchanged") {
  const auto small = classification_table(50);
  const auto big = classification_table(1000);
  CHECK(survivor_keys(small) == survivor_keys(big));
  std::vector<CongruenceSolution> restricted;
  for (const auto& r : big)
    if (!r.d || *r.d <= 50) restricted.push_back(r);
  CHECK(restricted == small);
}

TEST_CASE("negative D solutions are reported apart") {
  for (const auto& r : negative_divisor_scan(50)) {
    CHECK(*r.D < 0);
    CHECK(*r.D >= -*r.e * *r.d);
    CHECK(satisfies_plane_relation(*r.d, *r.e, *r.D));
    CHECK(r.reason == reason::kNegativeD);
  }
}

TEST_CASE("planarity evidence") {
  const PlanarityReport rep = planarity_evidence(20);
  CHECK(rep.integral_genus.size() == 296);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.counterexamples_passing_hurwitz() == 0);
  CHECK(planarity_evidence(50).integral_genus.size() == 1832);
  CHECK_THROWS_AS(planarity_evidence(2), std::invalid_argument);
}
