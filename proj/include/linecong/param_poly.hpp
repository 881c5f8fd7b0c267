#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace linecong {

/// Formal parameters of a congruence with a fundamental curve: curve degree,
/// curve genus, cone degree, and the degree of the divisor twisting the
/// class of the congruence inside the projective bundle.
enum class Symbol : std::uint8_t { d = 0, g = 1, e = 2, D = 3 };

inline constexpr std::size_t kSymbolCount = 4;

std::string_view symbol_name(Symbol s);

/// Integer values for every symbol; used for evaluation and substitution.
struct ParamValues {
  mpz_class d = 0;
  mpz_class g = 0;
  mpz_class e = 0;
  mpz_class D = 0;

  const mpz_class& operator[](Symbol s) const;
  mpz_class& operator[](Symbol s);
};

using Exponents = std::array<std::uint32_t, kSymbolCount>;

/// Multivariate polynomial with arbitrary-precision integer coefficients in the
/// symbols d, g, e, D.  Terms are kept canonical: no stored zero coefficient,
/// one entry per exponent vector.
class ParamPoly {
 public:
  using TermMap = std::map<Exponents, mpz_class>;

  ParamPoly() = default;
  ParamPoly(long value);  // NOLINT(google-explicit-constructor)
  ParamPoly(const mpz_class& value);  // NOLINT(google-explicit-constructor)

  static ParamPoly symbol(Symbol s);
  static ParamPoly monomial(const Exponents& exps, const mpz_class& coeff);

  /// Parses expressions such as "2*d^2*e - (d-1)*(d-2) + D".  Throws
  /// std::invalid_argument on malformed input.
  static ParamPoly parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  mpz_class constant_term() const;
  unsigned degree_in(Symbol s) const;
  unsigned total_degree() const;

  /// Coefficient of s^k, as a polynomial in the remaining symbols.
  ParamPoly coefficient(Symbol s, unsigned k) const;

  mpz_class evaluate(const ParamValues& at) const;

  /// Replaces s by numerator / denominator.  The division must be exact on the
  /// expanded result, otherwise std::domain_error is thrown.
  ParamPoly substitute(Symbol s, const ParamPoly& numerator,
                       const mpz_class& denominator = 1) const;

  /// Divides every coefficient by k; throws std::domain_error if inexact.
  ParamPoly exact_divide(const mpz_class& k) const;

  ParamPoly pow(unsigned k) const;

  ParamPoly& operator+=(const ParamPoly& rhs);
  ParamPoly& operator-=(const ParamPoly& rhs);
  ParamPoly& operator*=(const ParamPoly& rhs);

  friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
  friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
  friend ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs);
  friend ParamPoly operator-(const ParamPoly& p);
  friend bool operator==(const ParamPoly& lhs, const ParamPoly& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  /// Deterministic rendering: graded order, higher total degree first.
  std::string to_string() const;

 private:
  void add_term(const Exponents& exps, const mpz_class& coeff);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

namespace sym {
inline ParamPoly d() { return ParamPoly::symbol(Symbol::d); }
inline ParamPoly g() { return ParamPoly::symbol(Symbol::g); }
inline ParamPoly e() { return ParamPoly::symbol(Symbol::e); }
inline ParamPoly D() { return ParamPoly::symbol(Symbol::D); }
}  // namespace sym

}  // namespace linecong
