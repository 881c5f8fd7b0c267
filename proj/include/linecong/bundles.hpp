#pragma once

#include <cstdint>

#include "linecong/chow.hpp"

namespace linecong {

/// A vector bundle on X known only through its rank and total Chern class.
class BundleClass {
 public:
  /// Throws std::invalid_argument unless rank >= 0 and c_0 = 1.
  BundleClass(int rank, ChowElement total_chern);

  static BundleClass trivial(int n, int rank = 1);
  /// Line bundle with the given first Chern class (must be homogeneous of codim 1).
  static BundleClass line(const ChowElement& c1);

  int rank() const { return rank_; }
  int ambient_dim() const { return total_.ambient_dim(); }
  const ChowElement& total_chern() const { return total_; }
  /// c_k, with c_k = 0 outside 0..n.
  ChowElement chern(int k) const;

 private:
  int rank_;
  ChowElement total_;
};

BundleClass whitney(const BundleClass& a, const BundleClass& b);
/// Direct sum of k copies.
BundleClass whitney_power(const BundleClass& a, int k);

/// (1 + x)^{-1} = sum (-x)^j, exact because x^{n+1} = 0.
ChowElement chern_inverse(const ChowElement& total);
ChowElement chern_inverse(const BundleClass& a);

/// Schur determinant Delta_1^{(q)}: det [ c_{1+j-i}(b) ]_{1<=i,j<=q}.
/// Throws std::out_of_range unless 1 <= q <= n-1.
ChowElement schur_delta1(int q, const BundleClass& b);

/// The same class through s_q = sum_{k>=1} (-1)^{k-1} c_k s_{q-k}, which is the
/// expansion of the Toeplitz determinant along its first row.
ChowElement schur_delta1_recursive(int q, const BundleClass& b);

/// Determinant over the (commutative) Chow ring by cofactor expansion with
/// memoisation on the set of used columns.  Zero entries are skipped, so
/// banded matrices stay cheap.
ChowElement determinant(const std::vector<std::vector<ChowElement>>& m);

// ---------------------------------------------------------------------------
// Numerical bookkeeping for bundles on a smooth curve.

struct RankDegree {
  std::int64_t rank = 0;
  std::int64_t degree = 0;
  friend bool operator==(const RankDegree&, const RankDegree&) = default;
};

/// Riemann-Roch on a curve of genus g: chi = deg + rank (1 - g).
std::int64_t euler_char(std::int64_t rank, std::int64_t degree, std::int64_t genus);

/// Rank and degree of S^2 of a rank-2 bundle whose determinant has the given degree.
RankDegree sym2_rank2(std::int64_t c1_degree);

/// Tensor with a line bundle of degree m.
RankDegree twist(const RankDegree& v, std::int64_t m);

}  // namespace linecong
