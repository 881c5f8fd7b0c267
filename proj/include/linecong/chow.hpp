#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "linecong/param_poly.hpp"

namespace linecong {

struct CurveClass;

/// deg(L) = d, deg(K) = 2g - 2, deg(D) = D, deg(P) = 1, extended linearly.
ParamPoly degree_of(const CurveClass& c);

/// A divisor class on the fundamental curve C written in the formal symbols
///   L  hyperplane section, degree d
///   K  canonical divisor, degree 2g - 2
///   D  the twisting divisor, degree D
///   P  a point, degree 1 (also the fiber class F of X -> C)
/// with coefficients in ParamPoly.  Any product of two curve classes is zero.
struct CurveClass {
  ParamPoly L;
  ParamPoly K;
  ParamPoly D;
  ParamPoly P;

  static CurveClass hyperplane() { return {1, 0, 0, 0}; }
  static CurveClass canonical() { return {0, 1, 0, 0}; }
  static CurveClass twisting() { return {0, 0, 1, 0}; }
  static CurveClass point() { return {0, 0, 0, 1}; }

  bool is_zero() const { return L.is_zero() && K.is_zero() && D.is_zero() && P.is_zero(); }

  CurveClass& operator+=(const CurveClass& rhs);
  CurveClass& operator-=(const CurveClass& rhs);
  friend CurveClass operator+(CurveClass a, const CurveClass& b) { return a += b; }
  friend CurveClass operator-(CurveClass a, const CurveClass& b) { return a -= b; }
  friend CurveClass operator-(const CurveClass& a) { return {-a.L, -a.K, -a.D, -a.P}; }
  friend CurveClass operator*(const ParamPoly& s, const CurveClass& c) {
    return {s * c.L, s * c.K, s * c.D, s * c.P};
  }
  friend bool operator==(const CurveClass&, const CurveClass&) = default;

  /// Numerical image: the same degree carried entirely by P.
  CurveClass numerical() const { return {0, 0, 0, degree_of(*this)}; }

  std::string to_string() const;
};

/// Class in the Chow ring of X = P(Omega_{P^n}(2)|_C), a P^{n-1}-bundle over C.
///
/// The ring is generated over Pic(C) by the tautological class t with
///   t^n = (n-1) L t^{n-1}
/// and the point class F t^{n-1}.  Codimension k holds
///   alpha_k t^k + beta_k t^{k-1},  beta_k a CurveClass (beta_0 = 0).
/// Codimension n is kept reduced: alpha_n = 0 and beta_n carries the class,
/// so integrate() is just deg(beta_n).
class ChowElement {
 public:
  explicit ChowElement(int n);

  static ChowElement one(int n);
  static ChowElement t(int n);
  /// Pullback of a divisor class on C, sitting in codimension 1.
  static ChowElement curve(int n, const CurveClass& c);
  static ChowElement constant(int n, const ParamPoly& c);
  /// alpha t^k + beta t^{k-1}.
  static ChowElement homogeneous(int n, int k, const ParamPoly& alpha, const CurveClass& beta);

  int ambient_dim() const { return n_; }

  const ParamPoly& t_coeff(int k) const;
  const CurveClass& curve_coeff(int k) const;
  /// Component of codimension k, as an element of the ring.
  ChowElement part(int k) const;
  /// Lowest codimension with a non-zero component, or -1 for zero.
  int lowest_codim() const;
  bool is_zero() const;
  bool is_homogeneous(int k) const;

  /// Degree of the codimension-n component against the point class.
  ParamPoly integrate() const;

  /// Collapses every curve class to its degree times P.
  ChowElement numerical() const;
  /// Substitutes integers for all symbols.
  ChowElement evaluated(const ParamValues& at) const;

  ChowElement pow(unsigned k) const;

  ChowElement& operator+=(const ChowElement& rhs);
  ChowElement& operator-=(const ChowElement& rhs);
  friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
  friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
  friend ChowElement operator-(const ChowElement& a);
  friend ChowElement operator*(const ChowElement& a, const ChowElement& b);
  friend ChowElement operator*(const ParamPoly& s, const ChowElement& a);
  friend bool operator==(const ChowElement&, const ChowElement&) = default;

  std::string to_string() const;

 private:
  void check_same_dim(const ChowElement& other) const;
  void reduce_top();

  int n_;
  std::vector<ParamPoly> alpha_;
  std::vector<CurveClass> beta_;
};

std::ostream& operator<<(std::ostream& os, const ChowElement& x);
std::ostream& operator<<(std::ostream& os, const CurveClass& c);

}  // namespace linecong
