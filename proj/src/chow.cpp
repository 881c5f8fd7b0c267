#include "linecong/chow.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace linecong {

CurveClass& CurveClass::operator+=(const CurveClass& rhs) {
  L += rhs.L;
  K += rhs.K;
  D += rhs.D;
  P += rhs.P;
  return *this;
}

CurveClass& CurveClass::operator-=(const CurveClass& rhs) {
  L -= rhs.L;
  K -= rhs.K;
  D -= rhs.D;
  P -= rhs.P;
  return *this;
}

ParamPoly degree_of(const CurveClass& c) {
  return c.L * sym::d() + c.K * (2 * sym::g() - 2) + c.D * sym::D() + c.P;
}

namespace {

void append_scaled(std::ostringstream& os, bool& first, const ParamPoly& coeff,
                   const std::string& name) {
  if (coeff.is_zero()) return;
  if (!first) os << " + ";
  first = false;
  if (coeff == ParamPoly(1)) {
    os << name;
  } else if (coeff.is_constant() || coeff.terms().size() == 1) {
    os << coeff.to_string() << (name.empty() ? "" : "*" + name);
  } else {
    os << '(' << coeff.to_string() << ')' << (name.empty() ? "" : "*" + name);
  }
}

}  // namespace

std::string CurveClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  append_scaled(os, first, L, "L");
  append_scaled(os, first, K, "K");
  append_scaled(os, first, D, "D");
  append_scaled(os, first, P, "P");
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------

ChowElement::ChowElement(int n) : n_(n), alpha_(static_cast<std::size_t>(n) + 1),
                                  beta_(static_cast<std::size_t>(n) + 1) {
  if (n < 1) throw std::invalid_argument("ChowElement: ambient dimension must be positive");
}

ChowElement ChowElement::one(int n) { return constant(n, 1); }

ChowElement ChowElement::t(int n) { return homogeneous(n, 1, 1, {}); }

ChowElement ChowElement::curve(int n, const CurveClass& c) { return homogeneous(n, 1, 0, c); }

ChowElement ChowElement::constant(int n, const ParamPoly& c) { return homogeneous(n, 0, c, {}); }

ChowElement ChowElement::homogeneous(int n, int k, const ParamPoly& alpha,
                                     const CurveClass& beta) {
  ChowElement x(n);
  if (k < 0) throw std::invalid_argument("ChowElement: negative codimension");
  if (k > n) return x;
  if (k == 0 && !beta.is_zero())
    throw std::invalid_argument("ChowElement: a curve class needs codimension >= 1");
  x.alpha_[k] = alpha;
  x.beta_[k] = beta;
  x.reduce_top();
  return x;
}

const ParamPoly& ChowElement::t_coeff(int k) const { return alpha_.at(static_cast<std::size_t>(k)); }

const CurveClass& ChowElement::curve_coeff(int k) const {
  return beta_.at(static_cast<std::size_t>(k));
}

ChowElement ChowElement::part(int k) const {
  ChowElement x(n_);
  if (k < 0 || k > n_) return x;
  x.alpha_[k] = alpha_[k];
  x.beta_[k] = beta_[k];
  return x;
}

int ChowElement::lowest_codim() const {
  for (int k = 0; k <= n_; ++k)
    if (!alpha_[k].is_zero() || !beta_[k].is_zero()) return k;
  return -1;
}

bool ChowElement::is_zero() const { return lowest_codim() < 0; }

bool ChowElement::is_homogeneous(int k) const {
  for (int j = 0; j <= n_; ++j)
    if (j != k && (!alpha_[j].is_zero() || !beta_[j].is_zero())) return false;
  return true;
}

ParamPoly ChowElement::integrate() const { return degree_of(beta_[n_]); }

ChowElement ChowElement::numerical() const {
  ChowElement x = *this;
  for (auto& b : x.beta_) b = b.numerical();
  return x;
}

ChowElement ChowElement::evaluated(const ParamValues& at) const {
  auto ev = [&](const ParamPoly& p) { return ParamPoly(p.evaluate(at)); };
  ChowElement x(n_);
  for (int k = 0; k <= n_; ++k) {
    x.alpha_[k] = ev(alpha_[k]);
    const auto& b = beta_[k];
    x.beta_[k] = {ev(b.L), ev(b.K), ev(b.D), ev(b.P)};
  }
  return x;
}

ChowElement ChowElement::pow(unsigned k) const {
  ChowElement result = one(n_);
  ChowElement base = *this;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

void ChowElement::check_same_dim(const ChowElement& other) const {
  if (other.n_ != n_)
    throw std::invalid_argument("ChowElement: dimension mismatch (" + std::to_string(n_) +
                                " vs " + std::to_string(other.n_) + ")");
}

void ChowElement::reduce_top() {
  // t^n = (n-1) L t^{n-1}
  if (alpha_[n_].is_zero()) return;
  beta_[n_].L += ParamPoly(n_ - 1) * alpha_[n_];
  alpha_[n_] = ParamPoly();
}

ChowElement& ChowElement::operator+=(const ChowElement& rhs) {
  check_same_dim(rhs);
  for (int k = 0; k <= n_; ++k) {
    alpha_[k] += rhs.alpha_[k];
    beta_[k] += rhs.beta_[k];
  }
  return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& rhs) {
  check_same_dim(rhs);
  for (int k = 0; k <= n_; ++k) {
    alpha_[k] -= rhs.alpha_[k];
    beta_[k] -= rhs.beta_[k];
  }
  return *this;
}

ChowElement operator-(const ChowElement& a) {
  ChowElement x(a.n_);
  x -= a;
  return x;
}

ChowElement operator*(const ChowElement& a, const ChowElement& b) {
  a.check_same_dim(b);
  const int n = a.n_;
  ChowElement x(n);
  for (int i = 0; i <= n; ++i) {
    const bool a_zero = a.alpha_[i].is_zero() && a.beta_[i].is_zero();
    if (a_zero) continue;
    for (int j = 0; i + j <= n; ++j) {
      // (a t^i + A t^{i-1})(b t^j + B t^{j-1}) = ab t^{i+j} + (aB + bA) t^{i+j-1}
      if (!a.alpha_[i].is_zero()) {
        if (!b.alpha_[j].is_zero()) x.alpha_[i + j] += a.alpha_[i] * b.alpha_[j];
        if (!b.beta_[j].is_zero()) x.beta_[i + j] += a.alpha_[i] * b.beta_[j];
      }
      if (!a.beta_[i].is_zero() && !b.alpha_[j].is_zero())
        x.beta_[i + j] += b.alpha_[j] * a.beta_[i];
    }
  }
  x.reduce_top();
  return x;
}

ChowElement operator*(const ParamPoly& s, const ChowElement& a) {
  ChowElement x(a.n_);
  for (int k = 0; k <= a.n_; ++k) {
    x.alpha_[k] = s * a.alpha_[k];
    x.beta_[k] = s * a.beta_[k];
  }
  return x;
}

std::string ChowElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto t_power = [](int k) -> std::string {
    if (k == 0) return "";
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
  };
  for (int k = 0; k <= n_; ++k) {
    if (!alpha_[k].is_zero()) {
      if (!first) os << " + ";
      first = false;
      const std::string tp = t_power(k);
      if (tp.empty()) os << alpha_[k].to_string();
      else if (alpha_[k] == ParamPoly(1)) os << tp;
      else os << '(' << alpha_[k].to_string() << ")*" << tp;
    }
    if (!beta_[k].is_zero()) {
      if (!first) os << " + ";
      first = false;
      const std::string tp = t_power(k - 1);
      os << '[' << beta_[k].to_string() << ']' << (tp.empty() ? "" : "*" + tp);
    }
  }
  return first ? "0" : os.str();
}

std::ostream& operator<<(std::ostream& os, const ChowElement& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const CurveClass& c) { return os << c.to_string(); }

}  // namespace linecong
