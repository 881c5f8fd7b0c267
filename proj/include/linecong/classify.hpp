#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linecong {

enum class SolutionStatus { survives, eliminated, delegated };

std::string_view status_name(SolutionStatus s);
SolutionStatus parse_status(std::string_view s);

/// Row labels.  Filters are applied in this order and a row reports the first
/// one it fails.
namespace reason {
inline constexpr std::string_view kLine = "delegated: line";
inline constexpr std::string_view kBisecants = "delegated: bisecants";
inline constexpr std::string_view kAPositive = "eliminated: a >= 1";
inline constexpr std::string_view kHurwitz = "eliminated: b <= 2a";
inline constexpr std::string_view kABound = "eliminated: a-bound";
inline constexpr std::string_view kDBound = "eliminated: d-bound";
inline constexpr std::string_view kNegativeD = "diagnostics: negative D";
inline constexpr std::string_view kConic = "survives: scroll over a conic";
inline constexpr std::string_view kCubicScroll = "survives: scroll over a plane cubic";
inline constexpr std::string_view kCubicQuadricCones = "survives: plane cubic, e = 2";
inline constexpr std::string_view kUnexplained = "survives: unexplained";
}  // namespace reason

/// One row of the classification: a plane fundamental curve of degree d and
/// genus (d-1)(d-2)/2, cones of degree e, Y = e t - D, bidegree (a, b).
/// The two delegated rows that are not of this shape leave the numbers empty.
struct CongruenceSolution {
  std::optional<std::int64_t> e;
  std::optional<std::int64_t> d;
  std::optional<std::int64_t> g;
  std::optional<std::int64_t> D;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
  SolutionStatus status = SolutionStatus::eliminated;
  std::string reason;
  std::string anchor;

  friend bool operator==(const CongruenceSolution&, const CongruenceSolution&) = default;
};

/// d e (d-1)(e-1) == D (2de - D - 2e - 1).
bool satisfies_plane_relation(std::int64_t d, std::int64_t e, std::int64_t D);

/// Double-point relation solved for g:
///   g = (2d^2e^2 - 4de^2 - 2de + 2e^2 + 2e + D(1+2e-2de) + D^2) / (2e^2 + 2e).
/// Requires e >= 1.
mpq_class genus_from_relation(std::int64_t d, std::int64_t e, std::int64_t D);

/// Castelnuovo's bound for a non-degenerate curve of degree d in P^r:
///   m = floor((d-1)/(r-1)), eps = d-1-m(r-1), pi = m(m-1)(r-1)/2 + m eps.
std::int64_t castelnuovo_bound(std::int64_t d, std::int64_t r);

struct PlanarityCandidate {
  std::int64_t e = 0;
  std::int64_t d = 0;
  std::int64_t D = 0;
  std::int64_t g = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  bool passes_hurwitz = false;   // b <= 2a
  std::vector<std::int64_t> admissible_r;  // r in 3..d with g <= pi(d, r)
};

struct PlanarityReport {
  std::int64_t d_max = 0;
  std::size_t tuples_scanned = 0;
  /// Tuples whose relation genus is a non-negative integer.
  std::vector<PlanarityCandidate> integral_genus;
  /// Those with some admissible r, i.e. a non-plane curve is not excluded.
  std::vector<PlanarityCandidate> counterexamples;

  std::size_t counterexamples_passing_hurwitz() const;
};

/// For e = 1..3, d = 3..d_max, D = 0..ed-1: take the genus forced by the
/// double-point relation and test it against Castelnuovo for every 3 <= r <= d.
PlanarityReport planarity_evidence(std::int64_t d_max);

/// All (d, D) with 1 <= d <= d_max, 0 <= D <= ed-1 on the plane relation, each
/// tagged by the filters.  Throws std::invalid_argument unless e is 1, 2 or 3.
std::vector<CongruenceSolution> enumerate_solutions(std::int64_t e, std::int64_t d_max);

/// Plane-relation solutions with -ed <= D <= -1, reported separately.
std::vector<CongruenceSolution> negative_divisor_scan(std::int64_t d_max);

/// The two delegated rows followed by enumerate_solutions for e = 1, 2, 3,
/// ordered by (e, d, D).
std::vector<CongruenceSolution> classification_table(std::int64_t d_max);

std::vector<CongruenceSolution> survivors(const std::vector<CongruenceSolution>& rows);

}  // namespace linecong
