#include "linecong/param_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace linecong {

std::string_view symbol_name(Symbol s) {
  switch (s) {
    case Symbol::d: return "d";
    case Symbol::g: return "g";
    case Symbol::e: return "e";
    case Symbol::D: return "D";
  }
  return "?";
}

const mpz_class& ParamValues::operator[](Symbol s) const {
  switch (s) {
    case Symbol::d: return d;
    case Symbol::g: return g;
    case Symbol::e: return e;
    case Symbol::D: return D;
  }
  throw std::logic_error("bad symbol");
}

mpz_class& ParamValues::operator[](Symbol s) {
  return const_cast<mpz_class&>(std::as_const(*this)[s]);
}

ParamPoly::ParamPoly(long value) : ParamPoly(mpz_class(value)) {}

ParamPoly::ParamPoly(const mpz_class& value) {
  if (value != 0) terms_.emplace(Exponents{}, value);
}

ParamPoly ParamPoly::symbol(Symbol s) {
  Exponents exps{};
  exps[static_cast<std::size_t>(s)] = 1;
  return monomial(exps, 1);
}

ParamPoly ParamPoly::monomial(const Exponents& exps, const mpz_class& coeff) {
  ParamPoly p;
  p.add_term(exps, coeff);
  return p;
}

void ParamPoly::add_term(const Exponents& exps, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

mpz_class ParamPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

unsigned ParamPoly::degree_in(Symbol s) const {
  unsigned deg = 0;
  for (const auto& [exps, c] : terms_) deg = std::max(deg, exps[static_cast<std::size_t>(s)]);
  return deg;
}

unsigned ParamPoly::total_degree() const {
  unsigned deg = 0;
  for (const auto& [exps, c] : terms_)
    deg = std::max(deg, std::accumulate(exps.begin(), exps.end(), 0U));
  return deg;
}

ParamPoly ParamPoly::coefficient(Symbol s, unsigned k) const {
  const auto idx = static_cast<std::size_t>(s);
  ParamPoly out;
  for (const auto& [exps, c] : terms_) {
    if (exps[idx] != k) continue;
    Exponents reduced = exps;
    reduced[idx] = 0;
    out.add_term(reduced, c);
  }
  return out;
}

namespace {

mpz_class ipow(const mpz_class& base, unsigned k) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), k);
  return out;
}

}  // namespace

mpz_class ParamPoly::evaluate(const ParamValues& at) const {
  mpz_class total = 0;
  for (const auto& [exps, c] : terms_) {
    mpz_class term = c;
    for (std::size_t i = 0; i < kSymbolCount; ++i)
      if (exps[i] != 0) term *= ipow(at[static_cast<Symbol>(i)], exps[i]);
    total += term;
  }
  return total;
}

ParamPoly ParamPoly::substitute(Symbol s, const ParamPoly& numerator,
                                const mpz_class& denominator) const {
  if (denominator == 0) throw std::domain_error("substitute: zero denominator");
  const auto idx = static_cast<std::size_t>(s);
  const unsigned top = degree_in(s);
  // Scale everything by denominator^top so every power of s becomes integral,
  // then divide back out at the end.
  std::vector<ParamPoly> num_powers{ParamPoly(1)};
  for (unsigned k = 1; k <= top; ++k) num_powers.push_back(num_powers.back() * numerator);

  ParamPoly scaled;
  for (const auto& [exps, c] : terms_) {
    const unsigned k = exps[idx];
    Exponents rest = exps;
    rest[idx] = 0;
    scaled += monomial(rest, c * ipow(denominator, top - k)) * num_powers[k];
  }
  return scaled.exact_divide(ipow(denominator, top));
}

ParamPoly ParamPoly::exact_divide(const mpz_class& k) const {
  if (k == 0) throw std::domain_error("exact_divide: division by zero");
  ParamPoly out;
  for (const auto& [exps, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()))
      throw std::domain_error("exact_divide: coefficient " + c.get_str() +
                              " not divisible by " + k.get_str());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
    out.terms_.emplace(exps, q);
  }
  return out;
}

ParamPoly ParamPoly::pow(unsigned k) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
  for (const auto& [exps, c] : rhs.terms_) add_term(exps, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
  for (const auto& [exps, c] : rhs.terms_) add_term(exps, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs) {
  ParamPoly out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents sum;
      for (std::size_t i = 0; i < kSymbolCount; ++i) sum[i] = ea[i] + eb[i];
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

ParamPoly operator-(const ParamPoly& p) {
  ParamPoly out;
  for (const auto& [exps, c] : p.terms_) out.terms_.emplace(exps, -c);
  return out;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, mpz_class>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const auto da = std::accumulate(a.first.begin(), a.first.end(), 0U);
    const auto db = std::accumulate(b.first.begin(), b.first.end(), 0U);
    if (da != db) return da > db;
    return a.first > b.first;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, c] : ordered) {
    const bool is_unit_monomial = exps == Exponents{};
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || is_unit_monomial) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (exps[i] == 0) continue;
      if (wrote) os << '*';
      os << symbol_name(static_cast<Symbol>(i));
      if (exps[i] > 1) os << '^' << exps[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Parser: expr := term (('+'|'-') term)* ; term := unary ('*' unary)* ;
// unary := '-' unary | power ; power := atom ('^' integer)? ;
// atom := integer | symbol | '(' expr ')'.  Juxtaposition "2d" is accepted.

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  ParamPoly parse_all() {
    ParamPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("ParamPoly::parse: " + what + " at offset " +
                                std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'd' || c == 'g' ||
           c == 'e' || c == 'D';
  }

  ParamPoly expr() {
    ParamPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  ParamPoly term() {
    ParamPoly acc = unary();
    for (;;) {
      if (accept('*')) acc *= unary();
      else if (at_atom_start()) acc *= unary();
      else return acc;
    }
  }

  ParamPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ParamPoly power() {
    ParamPoly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  ParamPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParamPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ParamPoly(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    ++pos_;
    switch (c) {
      case 'd': return ParamPoly::symbol(Symbol::d);
      case 'g': return ParamPoly::symbol(Symbol::g);
      case 'e': return ParamPoly::symbol(Symbol::e);
      case 'D': return ParamPoly::symbol(Symbol::D);
      default: --pos_; fail(std::string("unknown symbol '") + c + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamPoly ParamPoly::parse(std::string_view text) { return PolyParser(text).parse_all(); }

}  // namespace linecong
