#include "linecong/normal.hpp"

#include <stdexcept>
#include <string>

namespace linecong {

CongruenceData CongruenceData::numeric(const ParamValues& at) {
  CongruenceData data;
  data.e = ParamPoly(at.e);
  data.L = CurveClass{0, 0, 0, ParamPoly(at.d)};
  data.K = CurveClass{0, 0, 0, ParamPoly(2 * at.g - 2)};
  data.D = CurveClass{0, 0, 0, ParamPoly(at.D)};
  return data;
}

ChowElement CongruenceData::congruence_class(int n) const {
  return e * ChowElement::t(n) - ChowElement::curve(n, D);
}

BundleClass pushout_bundle(int n, const CongruenceData& data, const NormalRecipe& recipe) {
  const ChowElement t = ChowElement::t(n);
  const ChowElement L = ChowElement::curve(n, data.L);
  if (recipe.pushout_twist_sign >= 0)
    return whitney(BundleClass::line(t - L), BundleClass::line(L));
  return whitney(BundleClass::line(t + L), BundleClass::line(-L));
}

BundleClass restricted_tangent(int n, const CongruenceData& data, const NormalRecipe& recipe) {
  const BundleClass hyperplane = BundleClass::line(ChowElement::curve(n, data.L));
  // Euler sequence: T_{P^n} + O = O(1)^{n+1}.
  const BundleClass sum = whitney_power(hyperplane, n + 1 + recipe.euler_offset);
  return {n, sum.total_chern()};
}

BundleClass chern_normal(int n, const CongruenceData& data, const NormalRecipe& recipe) {
  if (n < 3) throw std::invalid_argument("chern_normal: n must be at least 3");
  const ChowElement t = ChowElement::t(n);
  const ChowElement L = ChowElement::curve(n, data.L);
  const ChowElement K = ChowElement::curve(n, data.K);

  const BundleClass o21 = BundleClass::line(ParamPoly(2) * L - t);
  const BundleClass normal_in_x = BundleClass::line(data.congruence_class(n));
  const BundleClass tangent_c = BundleClass::line(-K);

  ChowElement total = restricted_tangent(n, data, recipe).total_chern() * chern_inverse(o21) *
                      normal_in_x.total_chern();
  if (recipe.divide_by_tangent) total = total * chern_inverse(tangent_c);
  return {n - 1, total};
}

ChowElement cn1_closed_form(int n) {
  const ParamPoly e = sym::e();
  const ParamPoly e1 = e + 1;
  const ParamPoly l_coeff = 5 * e - ParamPoly(n) * e - n + 3;
  return ChowElement::homogeneous(n, n - 1, e1, CurveClass{l_coeff, e1, -1, 0});
}

ParamPoly degree_cn1(int n, const CongruenceData& data, const NormalRecipe& recipe) {
  const ChowElement cn1 = chern_normal(n, data, recipe).chern(n - 1);
  return (cn1 * data.congruence_class(n)).integrate();
}

ParamPoly degree_cn1_closed_form() {
  return ParamPoly::parse("(4e^2 + 2e)d + e(e+1)(2g-2) - (2e+1)D");
}

ParamPoly porteous_a(int n, const CongruenceData& data, const NormalRecipe& recipe) {
  const ChowElement delta = schur_delta1(n - 1, pushout_bundle(n, data, recipe));
  return (delta * data.congruence_class(n)).integrate();
}

Bidegree bidegree(int n, const CongruenceData& data, const NormalRecipe& recipe) {
  return {porteous_a(n, data, recipe), data.e * degree_of(data.L)};
}

ParamPoly double_point_relation(int n, const CongruenceData& data, const NormalRecipe& recipe) {
  const Bidegree bd = bidegree(n, data, recipe);
  return bd.a * bd.a + bd.b * bd.b - degree_cn1(n, data, recipe);
}

ParamPoly double_point_relation_closed_form() {
  return ParamPoly::parse(
      "2d^2e^2 - 4de^2 - 2e^2g - 2de - 2eg + 2e^2 + 2e + D(1 + 2e - 2de) + D^2");
}

ParamPoly plane_relation() { return ParamPoly::parse("de(d-1)(e-1) - D(2de - D - 2e - 1)"); }

PlaneRelationIdentity plane_relation_identity(const NormalRecipe& recipe) {
  PlaneRelationIdentity out;
  out.general = double_point_relation(3, CongruenceData::symbolic(), recipe);
  // g enters with coefficient -2e(e+1), so the half-integer genus clears.
  out.specialized =
      out.general.substitute(Symbol::g, ParamPoly::parse("(d-1)(d-2)"), mpz_class(2));
  out.target = plane_relation();
  if (out.specialized == out.target) out.unit = 1;
  else if (out.specialized == -out.target) out.unit = -1;
  else
    throw VerificationError("plane relation identity failed: got " + out.specialized.to_string());
  return out;
}

ChowElement y0_class(int n, std::int64_t d_val) {
  if (n < 3) throw std::invalid_argument("y0_class: n must be at least 3");
  const ChowElement t = ChowElement::t(n);
  const ChowElement L = ChowElement::curve(n, CurveClass{0, 0, 0, ParamPoly(d_val)});
  return whitney_power(BundleClass::line(t - L), n - 2).chern(n - 2);
}

ParamPoly check_c_prime_square(int n) {
  const ChowElement y = ParamPoly(2) * ChowElement::t(n) -
                        ChowElement::curve(n, CurveClass{0, 0, 0, 3});
  // d = 3 in the ring relation as well.
  return (y * y * y0_class(n, 3)).integrate().substitute(Symbol::d, ParamPoly(3));
}

ParamPoly c_prime_square_symbolic(int n) {
  if (n < 3) throw std::invalid_argument("c_prime_square_symbolic: n must be at least 3");
  const ChowElement t = ChowElement::t(n);
  const ChowElement y = ParamPoly(2) * t - ChowElement::curve(n, CurveClass::twisting());
  const ChowElement y0 =
      whitney_power(BundleClass::line(t - ChowElement::curve(n, CurveClass::hyperplane())), n - 2)
          .chern(n - 2);
  return (y * y * y0).integrate();
}

namespace {

std::int64_t exact_half(std::int64_t v, const char* what) {
  if (v % 2 != 0) throw std::domain_error(std::string("dim_counts_36: ") + what + " is not integral");
  return v / 2;
}

}  // namespace

DimCounts36 dim_counts_36(int n) {
  if (n < 3) throw std::invalid_argument("dim_counts_36: n must be at least 3");
  const std::int64_t nn = n;
  DimCounts36 out;
  out.n = n;
  out.h0_base = exact_half(3 * (nn + 1) * (nn - 2), "3(n+1)(n-2)/2");
  out.fiber_image_dim = exact_half(nn * nn + nn - 4, "(n^2+n-4)/2");
  out.quadric_system_dim = exact_half((nn - 2) * (nn + 3), "(n-2)(n+3)/2");

  // Plane cubic, genus 1, deg L = 3, deg P = 1, deg D = 3, deg F = 1.
  constexpr std::int64_t genus = 1;
  constexpr std::int64_t deg_l = 3;
  constexpr std::int64_t deg_d = 3;
  constexpr std::int64_t deg_p = 1;
  const RankDegree s2 = twist(sym2_rank2(1), 2 * deg_p - deg_d);
  out.chi_sym2_twist = euler_char(s2.rank, s2.degree, genus);
  out.h0_lower_bound = out.h0_base + out.asserted_h0_sym2_twist_min;

  // p_* O_X(2t) = S^2(O(L)^{n-2} + F(P)); twist by -D and drop the S^2 F(P) piece:
  //   S^2(O(L)^{n-2})(-D) : (n-2)(n-1)/2 line bundles of degree 2L - D
  //   O(L)^{n-2} (x) F(P)(-D) : n-2 rank-2 bundles of degree 1 + 2 + 2(L - D)
  // All of positive degree on an elliptic curve, so h0 = chi.
  const std::int64_t line_count = (nn - 2) * (nn - 1) / 2;
  const std::int64_t mixed_count = nn - 2;
  const RankDegree mixed = twist({2, 1 + 2 * deg_p}, deg_l - deg_d);
  out.h0_base_from_summands = line_count * euler_char(1, 2 * deg_l - deg_d, genus) +
                              mixed_count * euler_char(mixed.rank, mixed.degree, genus);
  out.consistent = out.fiber_image_dim == out.quadric_system_dim + 1 &&
                   out.h0_base == out.h0_base_from_summands;
  return out;
}

}  // namespace linecong
