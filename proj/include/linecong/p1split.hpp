#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linecong/bundles.hpp"
#include "linecong/linalg.hpp"

namespace linecong {

/// Binary form of a fixed degree.  coeffs[k] multiplies x^{degree-k} y^k.
/// A negative degree is allowed only for the zero form.
struct BinaryForm {
  std::int64_t degree = 0;
  QVector coeffs;

  static BinaryForm zero(std::int64_t degree);
  static BinaryForm constant(const mpq_class& c);
  /// c x^i y^j
  static BinaryForm monomial(std::int64_t i, std::int64_t j, const mpq_class& c = 1);
  /// Integer polynomial in x, y.  `expected_degree` is used for `0` and
  /// checked against every other input.
  static BinaryForm parse(std::string_view text, std::int64_t expected_degree);

  bool is_zero() const;
  /// Largest j with x^j dividing the form.
  std::int64_t x_multiplicity() const;
  std::string to_string() const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);
};

/// a = q * b exactly, or std::domain_error.
BinaryForm exact_divide(const BinaryForm& a, const BinaryForm& b);

struct FormTarget {
  std::int64_t twist = 0;
  BinaryForm form;
};

/// A map O(m0) -> sum O(a_i) given by forms f_i of degree a_i - m0.
struct FormVector {
  std::int64_t source_twist = 0;
  std::vector<FormTarget> targets;

  /// `O(m0) -> O(a1):f1, O(a2):f2, ...`, whitespace-insensitive.
  /// Throws std::invalid_argument on malformed input.
  static FormVector parse(std::string_view text);

  /// Throws std::invalid_argument if some form has the wrong degree.
  void validate() const;
  bool is_zero() const;
  std::int64_t target_degree() const;
  std::string to_string() const;
};

/// Sorted descending; equality is multiset equality.
class SplitBundle {
 public:
  SplitBundle() = default;
  explicit SplitBundle(std::vector<std::int64_t> twists);

  const std::vector<std::int64_t>& twists() const { return twists_; }
  std::int64_t rank() const { return static_cast<std::int64_t>(twists_.size()); }
  std::int64_t degree() const;
  /// O(3) + O(2)^2 + O(1); "0" for rank 0.
  std::string to_string() const;

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

 private:
  std::vector<std::int64_t> twists_;
};

/// Cokernel of a FormVector: torsion of length `torsion` plus a split bundle.
struct SplitResult {
  std::int64_t torsion = 0;
  SplitBundle bundle;

  bool has_torsion() const { return torsion > 0; }
  std::string to_string() const;
  friend bool operator==(const SplitResult&, const SplitResult&) = default;
};

/// h^0 of the cokernel sheaf twisted by m.  Besides the cokernel on sections
/// this counts the kernel of H^1(O(m0+m)) -> sum H^1(O(a_i+m)), computed
/// through the Serre-dual multiplication map.  Throws std::invalid_argument on
/// the zero map.
std::int64_t h0_twist(const FormVector& v, std::int64_t m);

/// gcd of the forms, up to a scalar.
BinaryForm common_divisor(const FormVector& v);

/// Divides out the common divisor and reads the twists off the Hilbert
/// function of the reduced map.  Throws std::invalid_argument on the zero map
/// and std::logic_error if rank or degree is not conserved.
SplitResult splitting_type(const FormVector& v);

/// True if every partial sum of a's descending twists is <= that of b.
/// Both must have the same rank and degree.
bool more_balanced(const SplitBundle& a, const SplitBundle& b);

// ---------------------------------------------------------------------------
// Strata of O -> O(1)^2 + O(2)^{n-2} by the rank of the O(1)^2 block.

enum class Stratum { injective, zero_on_one_factor, zero };

std::string_view stratum_name(Stratum s);

/// Throws std::invalid_argument unless the first two targets are O(m0+1).
Stratum classify_stratum(const FormVector& v);

/// Deterministic representative: linear forms (x, y), (0, x) or (0, 0),
/// quadrics cycling through a fixed list.
FormVector stratum_representative(int n, Stratum s);

/// Expected cokernel: O(2)^{n-1}, O(3) + O(2)^{n-3} + O(1), none.
std::optional<SplitBundle> expected_stratum_bundle(int n, Stratum s);

struct StratumResult {
  Stratum stratum = Stratum::injective;
  std::string description;
  FormVector representative;
  std::optional<SplitResult> splitting;
  bool contradiction = false;
};

/// The three strata for n >= 4.  Throws std::invalid_argument otherwise.
std::vector<StratumResult> strata_enumerate(int n);

/// O(1) -> O(1)^2 + O(2)^{n-2} with constants (1, 0) on the O(1)^2 block.
FormVector case12_map(int n);

struct GenericityReport {
  Stratum stratum = Stratum::injective;
  int draws = 0;
  int skipped = 0;  // torsion or landed in another stratum
  int agreed = 0;
  bool ok() const { return agreed + skipped == draws && agreed > 0; }
};

/// Random integer forms in the given stratum, seeded mt19937_64, each checked
/// against the expected type and the oracle.
GenericityReport genericity_recheck(int n, Stratum s, std::uint64_t seed, int draws);

// ---------------------------------------------------------------------------
// Restriction of Omega_{P^n}(2) to a plane curve of degree d.

struct CotangentDecomposition {
  int n = 0;
  std::int64_t d = 0;
  /// n-2 copies of (1, d) followed by the twisted rank-2 piece (2, d).
  std::vector<RankDegree> summands;
  std::int64_t total_rank = 0;
  std::int64_t total_c1 = 0;
  std::int64_t expected_c1 = 0;  // (n-1) d
  std::int64_t normalized_rank2_degree = 0;  // d - 2
  std::int64_t ruled_invariant = 0;           // -(d - 2)
  std::string note;
  bool consistent = false;
};

/// Throws std::invalid_argument unless n >= 3, d >= 1.
CotangentDecomposition restricted_cotangent_decomposition(int n, std::int64_t d);

}  // namespace linecong
