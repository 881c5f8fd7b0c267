#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace linecong {

/// Y* = alpha E + beta Q + gamma Z in Pic of the blow-up of the cone of lines
/// meeting a fixed line, at its vertex.  E is the exceptional divisor,
/// E = P^1 x P^{n-2}.
struct PicardClass {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  friend bool operator==(const PicardClass&, const PicardClass&) = default;
};

/// Class of W = Y* . E in E, as (coefficient of P^1 x P^{n-3},
/// coefficient of P^0 x P^{n-2}) = (beta - alpha, gamma - alpha).
std::pair<std::int64_t, std::int64_t> w_class(const PicardClass& p);

enum class LineCaseKind {
  /// Y misses the vertex: Y = cone . hypersurface of degree a, b = a.
  complete_intersection,
  /// W is a fiber P^{n-2}: b = a - 1, Y linked in cone . (degree a+1) to an
  /// (n-1)-fold of degree n-2 through the vertex.
  linked_through_vertex,
  /// n = 3 only: W is the other ruling; linked to the plane of lines through
  /// a point.  Classical, not computed here.
  linked_to_point_plane,
  not_realizable,
  not_effective,
};

std::string_view line_case_name(LineCaseKind k);

struct LineCaseResult {
  LineCaseKind kind = LineCaseKind::not_realizable;
  std::pair<std::int64_t, std::int64_t> w{0, 0};
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
  std::optional<std::int64_t> hypersurface_degree;
  std::optional<std::int64_t> residual_degree;
  bool delegated = false;
  std::string detail;

  bool smooth() const {
    return kind == LineCaseKind::complete_intersection ||
           kind == LineCaseKind::linked_through_vertex ||
           kind == LineCaseKind::linked_to_point_plane;
  }
};

/// Throws std::invalid_argument for n < 3.
LineCaseResult classify_line_congruence(int n, const PicardClass& p);

}  // namespace linecong
