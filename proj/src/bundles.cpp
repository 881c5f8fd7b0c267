#include "linecong/bundles.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace linecong {

BundleClass::BundleClass(int rank, ChowElement total_chern)
    : rank_(rank), total_(std::move(total_chern)) {
  if (rank_ < 0) throw std::invalid_argument("BundleClass: negative rank");
  if (!(total_.part(0) == ChowElement::one(total_.ambient_dim())))
    throw std::invalid_argument("BundleClass: total Chern class must start with 1");
}

BundleClass BundleClass::trivial(int n, int rank) { return {rank, ChowElement::one(n)}; }

BundleClass BundleClass::line(const ChowElement& c1) {
  if (!c1.is_zero() && !c1.is_homogeneous(1))
    throw std::invalid_argument("BundleClass::line: first Chern class must have codimension 1");
  return {1, ChowElement::one(c1.ambient_dim()) + c1};
}

ChowElement BundleClass::chern(int k) const { return total_.part(k); }

BundleClass whitney(const BundleClass& a, const BundleClass& b) {
  return {a.rank() + b.rank(), a.total_chern() * b.total_chern()};
}

BundleClass whitney_power(const BundleClass& a, int k) {
  if (k < 0) throw std::invalid_argument("whitney_power: negative multiplicity");
  return {a.rank() * k, a.total_chern().pow(static_cast<unsigned>(k))};
}

ChowElement chern_inverse(const ChowElement& total) {
  const int n = total.ambient_dim();
  const ChowElement one = ChowElement::one(n);
  if (!(total.part(0) == one))
    throw std::invalid_argument("chern_inverse: degree-0 part must be 1");
  const ChowElement minus_x = one - total;
  ChowElement sum = one;
  ChowElement power = one;
  for (int j = 1; j <= n; ++j) {
    power = power * minus_x;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

ChowElement chern_inverse(const BundleClass& a) { return chern_inverse(a.total_chern()); }

ChowElement determinant(const std::vector<std::vector<ChowElement>>& m) {
  const std::size_t q = m.size();
  if (q == 0) throw std::invalid_argument("determinant: empty matrix");
  if (q > 30) throw std::invalid_argument("determinant: matrix too large");
  const int n = m[0][0].ambient_dim();
  for (const auto& row : m)
    if (row.size() != q) throw std::invalid_argument("determinant: matrix not square");

  // partial[mask] = signed sum over injective maps {rows 0..r-1} -> mask.
  std::map<std::uint32_t, ChowElement> partial;
  partial.emplace(0U, ChowElement::one(n));
  for (std::size_t r = 0; r < q; ++r) {
    std::map<std::uint32_t, ChowElement> next;
    for (const auto& [mask, value] : partial) {
      for (std::size_t c = 0; c < q; ++c) {
        const std::uint32_t bit = 1U << c;
        if ((mask & bit) != 0 || m[r][c].is_zero()) continue;
        // Used columns to the right of c each contribute one inversion.
        const int inversions = __builtin_popcount(mask >> (c + 1));
        ChowElement term = value * m[r][c];
        if (term.is_zero()) continue;
        auto [it, inserted] = next.try_emplace(mask | bit, ChowElement(n));
        if (inversions % 2 == 0) it->second += term;
        else it->second -= term;
      }
    }
    partial = std::move(next);
  }
  const auto full = static_cast<std::uint32_t>((1ULL << q) - 1);
  auto it = partial.find(full);
  return it == partial.end() ? ChowElement(n) : it->second;
}

namespace {

void check_schur_range(int q, const BundleClass& b) {
  const int n = b.ambient_dim();
  if (q < 1 || q > n - 1)
    throw std::out_of_range("schur_delta1: q = " + std::to_string(q) + " outside 1.." +
                            std::to_string(n - 1));
}

}  // namespace

ChowElement schur_delta1(int q, const BundleClass& b) {
  check_schur_range(q, b);
  std::vector<std::vector<ChowElement>> m(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    m[i].reserve(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) m[i].push_back(b.chern(1 + j - i));
  }
  return determinant(m);
}

ChowElement schur_delta1_recursive(int q, const BundleClass& b) {
  check_schur_range(q, b);
  const int n = b.ambient_dim();
  std::vector<ChowElement> s{ChowElement::one(n)};
  for (int p = 1; p <= q; ++p) {
    ChowElement acc(n);
    for (int k = 1; k <= p; ++k) {
      const ChowElement term = b.chern(k) * s[p - k];
      if (k % 2 == 1) acc += term;
      else acc -= term;
    }
    s.push_back(std::move(acc));
  }
  return s[q];
}

std::int64_t euler_char(std::int64_t rank, std::int64_t degree, std::int64_t genus) {
  if (rank < 0) throw std::invalid_argument("euler_char: negative rank");
  return degree + rank * (1 - genus);
}

RankDegree sym2_rank2(std::int64_t c1_degree) { return {3, 3 * c1_degree}; }

RankDegree twist(const RankDegree& v, std::int64_t m) { return {v.rank, v.degree + v.rank * m}; }

}  // namespace linecong
