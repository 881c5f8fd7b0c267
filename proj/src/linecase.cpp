#include "linecong/linecase.hpp"

#include <stdexcept>

namespace linecong {

std::pair<std::int64_t, std::int64_t> w_class(const PicardClass& p) {
  return {p.beta - p.alpha, p.gamma - p.alpha};
}

std::string_view line_case_name(LineCaseKind k) {
  switch (k) {
    case LineCaseKind::complete_intersection: return "complete-intersection";
    case LineCaseKind::linked_through_vertex: return "linked-through-vertex";
    case LineCaseKind::linked_to_point_plane: return "linked-to-point-plane";
    case LineCaseKind::not_realizable: return "not-smoothly-realizable";
    case LineCaseKind::not_effective: return "not-effective";
  }
  return "?";
}

LineCaseResult classify_line_congruence(int n, const PicardClass& p) {
  if (n < 3) throw std::invalid_argument("classify_line_congruence: n must be at least 3");
  LineCaseResult out;
  out.w = w_class(p);

  if (p.alpha < 0 || p.beta < 0 || p.gamma < 0 || (p.beta == 0 && p.gamma == 0)) {
    out.kind = LineCaseKind::not_effective;
    out.detail = "need alpha, beta, gamma >= 0 and (beta, gamma) != (0, 0)";
    return out;
  }

  const auto [w1, w2] = out.w;
  const std::int64_t alpha = p.alpha;

  if (w1 == 0 && w2 == 0) {
    out.kind = LineCaseKind::complete_intersection;
    out.a = alpha;
    out.b = alpha;
    out.hypersurface_degree = alpha;
    out.detail = "Y* misses E; Y is the cone cut by a hypersurface of degree a";
    return out;
  }

  // W must be a P^{n-2} embedded in P^1 x P^{n-2} as a divisor.  For n >= 4
  // only the fiber class (0, 1) qualifies; for n = 3 also (1, 0).
  if (w1 == 0 && w2 == 1) {
    if (alpha < 1) {
      out.kind = LineCaseKind::not_realizable;
      out.detail = "bidegree (0, -1) is not a congruence";
      return out;
    }
    out.kind = LineCaseKind::linked_through_vertex;
    out.a = alpha;
    out.b = alpha - 1;
    out.hypersurface_degree = alpha + 1;
    out.residual_degree = n - 2;
    out.detail = "linked in the cone to an (n-1)-fold of degree n-2 through the vertex";
    return out;
  }

  if (n == 3 && w1 == 1 && w2 == 0 && alpha >= 1) {
    out.kind = LineCaseKind::linked_to_point_plane;
    out.delegated = true;
    out.detail = "n = 3: linked to the plane of all lines through a point (classical)";
    return out;
  }

  out.kind = LineCaseKind::not_realizable;
  out.detail = "W = (" + std::to_string(w1) + ", " + std::to_string(w2) +
               ") is not a divisor isomorphic to P^" + std::to_string(n - 2);
  return out;
}

}  // namespace linecong
