#pragma once

#include <cstdint>
#include <string>

#include "linecong/bundles.hpp"
#include "linecong/errors.hpp"

namespace linecong {

/// The data attached to a congruence Y in X: cone degree e and the divisor
/// classes L, K, D on the fundamental curve.  Y has class e t - D in X.
/// The default is fully symbolic; numeric() plugs integers in first, which is
/// the substitution-first route used to cross-check the symbolic one.
struct CongruenceData {
  ParamPoly e = sym::e();
  CurveClass L = CurveClass::hyperplane();
  CurveClass K = CurveClass::canonical();
  CurveClass D = CurveClass::twisting();

  static CongruenceData symbolic() { return {}; }
  /// L, K, D replaced by deg * P with integer degrees d, 2g-2, D; e by its value.
  static CongruenceData numeric(const ParamValues& at);

  /// e t - D.
  ChowElement congruence_class(int n) const;
};

/// Switches used by the verification driver to corrupt one ingredient of
/// c(N) on purpose.  A correct build uses the defaults.
struct NormalRecipe {
  /// Number of O(L) factors in the Euler sequence (n + 1 + offset).
  int euler_offset = 0;
  /// Divide by c(T_C).
  bool divide_by_tangent = true;
  /// Sign of the t L term in c(F) (+1 for the push-out bundle).
  int pushout_twist_sign = 1;
};

/// The push-out bundle F of rank 2: 0 -> O_X(-1,1) -> F -> O_X(1,0) -> 0,
/// so c(F) = (1 + t - L)(1 + L) = 1 + t + L t.
BundleClass pushout_bundle(int n, const CongruenceData& data = {}, const NormalRecipe& recipe = {});

/// c(T_{P^n}|_C) = (1 + L)^{n+1} = 1 + (n+1) L, because L^2 = 0.
BundleClass restricted_tangent(int n, const CongruenceData& data = {},
                               const NormalRecipe& recipe = {});

/// Normal bundle N of Y in G(1,n), rank n-1:
///   c(N) = c(T_{P^n}|_C) c(O_X(2,-1))^{-1} c(O_X(e t - D)) c(T_C)^{-1}.
BundleClass chern_normal(int n, const CongruenceData& data = {}, const NormalRecipe& recipe = {});

/// (e+1) t^{n-1} + (5e - ne - n + 3) L t^{n-2} + (e+1) K t^{n-2} - D t^{n-2}.
ChowElement cn1_closed_form(int n);

/// integrate(c_{n-1}(N) (e t - D)).
ParamPoly degree_cn1(int n, const CongruenceData& data = {}, const NormalRecipe& recipe = {});

/// (4e^2 + 2e) d + e(e+1)(2g-2) - (2e+1) D.
ParamPoly degree_cn1_closed_form();

/// First bidegree from the degeneracy locus of n sections of F:
///   a = integrate(Delta_1^{(n-1)}(F) (e t - D)).
ParamPoly porteous_a(int n, const CongruenceData& data = {}, const NormalRecipe& recipe = {});

struct Bidegree {
  ParamPoly a;
  ParamPoly b;
};

/// a from porteous_a; b = e d is taken as given (lines of Y in a hyperplane
/// meeting a line: d points of C, e lines of each cone).
Bidegree bidegree(int n, const CongruenceData& data = {}, const NormalRecipe& recipe = {});

/// a^2 + b^2 - deg c_{n-1}(N).  The double-point formula says this vanishes.
ParamPoly double_point_relation(int n, const CongruenceData& data = {},
                                 const NormalRecipe& recipe = {});

/// 2d^2e^2 - 4de^2 - 2e^2g - 2de - 2eg + 2e^2 + 2e + D(1 + 2e - 2de) + D^2.
ParamPoly double_point_relation_closed_form();

/// Relation for a plane fundamental curve: de(d-1)(e-1) - D(2de - D - 2e - 1).
ParamPoly plane_relation();

struct PlaneRelationIdentity {
  ParamPoly general;      // the double-point relation with g free
  ParamPoly specialized;  // after g = (d-1)(d-2)/2
  ParamPoly target;       // plane_relation()
  int unit = 0;           // specialized == unit * target
};

/// Substitutes the plane genus into the double-point relation and checks the
/// result against plane_relation() up to sign.  Throws VerificationError if it
/// does not match.
PlaneRelationIdentity plane_relation_identity(const NormalRecipe& recipe = {});

/// [Y_0] = c_{n-2}(O_X(t - L)^{n-2}) = (t - L)^{n-2} with L = d_val * P,
/// i.e. t^{n-2} - (n-2) d_val P t^{n-3}.
ChowElement y0_class(int n, std::int64_t d_val);

/// integrate((2t - D)^2 [Y_0]) for the plane cubic with D of degree 3.
ParamPoly check_c_prime_square(int n);

/// Same product with d and D left symbolic: equals 4(d - D) for every n.
ParamPoly c_prime_square_symbolic(int n);

struct DimCounts36 {
  int n = 0;
  std::int64_t h0_base = 0;          // 3(n+1)(n-2)/2
  std::int64_t fiber_image_dim = 0;  // (n^2+n-4)/2, vector-space dimension
  std::int64_t quadric_system_dim = 0;  // (n-2)(n+3)/2, projective dimension
  std::int64_t chi_sym2_twist = 0;   // chi(S^2(F)(2P - D)) on the elliptic curve
  std::int64_t asserted_h0_sym2_twist_min = 1;  // the value needed for the base locus argument
  std::int64_t h0_lower_bound = 0;   // h0_base + asserted minimum
  std::int64_t h0_base_from_summands = 0;  // Riemann-Roch over the split summands of p_* O_X(2t - D)
  bool consistent = false;           // fiber_image_dim == quadric_system_dim + 1
};

/// Dimension counts for the (3,6) construction.  Throws std::domain_error on a
/// non-integral count (cannot happen for integer n, checked anyway).
DimCounts36 dim_counts_36(int n);

}  // namespace linecong
