#include "linecong/p1split.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "linecong/p1split_oracle.hpp"

namespace linecong {

namespace {

std::int64_t dim_s(std::int64_t k) { return k >= 0 ? k + 1 : 0; }

// ---- form parsing ----------------------------------------------------------

using BiPoly = std::map<std::pair<std::int64_t, std::int64_t>, mpq_class>;

BiPoly bi_mul(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto& slot = out[{ea.first + eb.first, ea.second + eb.second}];
      slot += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BiPoly bi_add(BiPoly a, const BiPoly& b, int sign) {
  for (const auto& [e, c] : b) a[e] += sign * c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

class FormParser {
 public:
  explicit FormParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  BiPoly parse() {
    if (s_.empty()) fail("empty form");
    BiPoly p = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("form '" + s_ + "': " + what);
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  BiPoly expr() {
    BiPoly acc;
    int sign = 1;
    if (peek('+') || peek('-')) sign = s_[pos_++] == '-' ? -1 : 1;
    acc = bi_add(acc, term(), sign);
    while (peek('+') || peek('-')) {
      sign = s_[pos_++] == '-' ? -1 : 1;
      acc = bi_add(acc, term(), sign);
    }
    return acc;
  }

  BiPoly term() {
    BiPoly acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = bi_mul(acc, factor());
      } else if (pos_ < s_.size() &&
                 (s_[pos_] == 'x' || s_[pos_] == 'y' || s_[pos_] == '(' ||
                  std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
        acc = bi_mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  BiPoly factor() {
    BiPoly base = primary();
    if (!peek('^')) return base;
    ++pos_;
    const std::int64_t k = integer();
    if (k < 0) fail("negative exponent");
    BiPoly out{{{0, 0}, 1}};
    for (std::int64_t i = 0; i < k; ++i) out = bi_mul(out, base);
    return out;
  }

  BiPoly primary() {
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      return {{{1, 0}, 1}};
    }
    if (c == 'y') {
      ++pos_;
      return {{{0, 1}, 1}};
    }
    if (c == '(') {
      ++pos_;
      BiPoly p = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(s_.substr(start, pos_ - start));
      if (v == 0) return {};
      return {{{0, 0}, mpq_class(v)}};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc() || start == pos_) fail("expected an integer");
    return v;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// "O(k)" -> k
std::int64_t parse_twist(std::string_view raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 4 || s[0] != 'O' || s[1] != '(' || s.back() != ')')
    throw std::invalid_argument("expected O(k), got '" + s + "'");
  std::int64_t v = 0;
  const char* first = s.data() + 2;
  const char* last = s.data() + s.size() - 1;
  if (first != last && *first == '+') ++first;
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last) throw std::invalid_argument("bad twist in '" + s + "'");
  return v;
}

// ---- univariate helpers (index = power of y) ------------------------------

using UPoly = QVector;

void u_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly u_mod(UPoly a, const UPoly& b) {
  u_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    u_trim(a);
  }
  return a;
}

UPoly u_gcd(UPoly a, UPoly b) {
  u_trim(a);
  u_trim(b);
  while (!b.empty()) {
    UPoly r = u_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// ---- graded maps -----------------------------------------------------------

// S_{m0+m} -> sum S_{a_i+m}
QMatrix section_map(const FormVector& v, std::int64_t m) {
  const std::int64_t cols = dim_s(v.source_twist + m);
  std::int64_t rows = 0;
  for (const auto& t : v.targets) rows += dim_s(t.twist + m);
  QMatrix a(static_cast<std::size_t>(rows), QVector(static_cast<std::size_t>(cols), 0));
  std::int64_t offset = 0;
  for (const auto& t : v.targets) {
    if (!t.form.is_zero()) {
      for (std::int64_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < t.form.coeffs.size(); ++k)
          a[static_cast<std::size_t>(offset + j) + k][static_cast<std::size_t>(j)] = t.form.coeffs[k];
    }
    offset += dim_s(t.twist + m);
  }
  return a;
}

// sum S_{p-a_i} -> S_{p-m0}
QMatrix dual_map(const FormVector& v, std::int64_t p) {
  const std::int64_t rows = dim_s(p - v.source_twist);
  std::int64_t cols = 0;
  for (const auto& t : v.targets) cols += dim_s(p - t.twist);
  QMatrix b(static_cast<std::size_t>(rows), QVector(static_cast<std::size_t>(cols), 0));
  std::int64_t offset = 0;
  for (const auto& t : v.targets) {
    const std::int64_t block = dim_s(p - t.twist);
    if (!t.form.is_zero()) {
      for (std::int64_t j = 0; j < block; ++j)
        for (std::size_t k = 0; k < t.form.coeffs.size(); ++k)
          b[static_cast<std::size_t>(j) + k][static_cast<std::size_t>(offset + j)] = t.form.coeffs[k];
    }
    offset += block;
  }
  return b;
}

std::string coeff_prefix(const mpq_class& c, bool has_monomial) {
  if (!has_monomial) return c.get_str();
  if (c == 1) return "";
  if (c.get_den() == 1) return c.get_str();
  return "(" + c.get_str() + ")";
}

std::string monomial_str(std::int64_t i, std::int64_t j) {
  std::string out;
  if (i > 0) out += i == 1 ? "x" : "x^" + std::to_string(i);
  if (j > 0) out += j == 1 ? "y" : "y^" + std::to_string(j);
  return out;
}

}  // namespace

// ---- BinaryForm --------------------------------------------------------------

BinaryForm BinaryForm::zero(std::int64_t degree) {
  BinaryForm f;
  f.degree = degree;
  f.coeffs.assign(static_cast<std::size_t>(dim_s(degree)), 0);
  return f;
}

BinaryForm BinaryForm::constant(const mpq_class& c) {
  BinaryForm f = zero(0);
  f.coeffs[0] = c;
  return f;
}

BinaryForm BinaryForm::monomial(std::int64_t i, std::int64_t j, const mpq_class& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("BinaryForm::monomial: negative exponent");
  BinaryForm f = zero(i + j);
  f.coeffs[static_cast<std::size_t>(j)] = c;
  return f;
}

BinaryForm BinaryForm::parse(std::string_view text, std::int64_t expected_degree) {
  const BiPoly p = FormParser(text).parse();
  BinaryForm f = zero(expected_degree);
  for (const auto& [e, c] : p) {
    if (e.first + e.second != expected_degree)
      throw std::invalid_argument("form '" + trim(text) + "' is not homogeneous of degree " +
                                  std::to_string(expected_degree));
    f.coeffs[static_cast<std::size_t>(e.second)] = c;
  }
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const mpq_class& c) { return c == 0; });
}

std::int64_t BinaryForm::x_multiplicity() const {
  if (is_zero()) throw std::invalid_argument("x_multiplicity of the zero form");
  std::int64_t j = 0;
  for (auto k = static_cast<std::int64_t>(coeffs.size()) - 1; k >= 0 && coeffs[k] == 0; --k) ++j;
  return j;
}

std::string BinaryForm::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const mpq_class& c = coeffs[k];
    if (c == 0) continue;
    const std::string mono = monomial_str(degree - static_cast<std::int64_t>(k), k);
    const mpq_class mag = abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    out += coeff_prefix(mag, !mono.empty()) + mono;
  }
  return out;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out = BinaryForm::zero(a.degree + b.degree);
  if (a.is_zero() || b.is_zero()) return out;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree != b.degree) throw std::invalid_argument("BinaryForm: adding forms of different degree");
  BinaryForm out = a;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] += b.coeffs[k];
  return out;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  return a.degree == b.degree && a.coeffs == b.coeffs;
}

BinaryForm exact_divide(const BinaryForm& a, const BinaryForm& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by the zero form");
  const std::int64_t qdeg = a.degree - b.degree;
  if (a.is_zero()) return BinaryForm::zero(qdeg);
  if (qdeg < 0) throw std::domain_error("exact_divide: divisor has larger degree");
  std::size_t s = 0;
  while (b.coeffs[s] == 0) ++s;
  BinaryForm q = BinaryForm::zero(qdeg);
  for (std::size_t j = 0; j < q.coeffs.size(); ++j) {
    mpq_class val = a.coeffs[j + s];
    for (std::size_t i = 0; i < j; ++i) {
      const std::size_t bi = j + s - i;
      if (bi < b.coeffs.size()) val -= q.coeffs[i] * b.coeffs[bi];
    }
    q.coeffs[j] = val / b.coeffs[s];
  }
  if (!(q * b == a))
    throw std::domain_error("exact_divide: " + b.to_string() + " does not divide " + a.to_string());
  return q;
}

// ---- FormVector --------------------------------------------------------------

FormVector FormVector::parse(std::string_view text) {
  const auto arrow = text.find("->");
  if (arrow == std::string_view::npos) throw std::invalid_argument("form vector: missing '->'");
  FormVector v;
  v.source_twist = parse_twist(text.substr(0, arrow));
  std::string_view rest = text.substr(arrow + 2);
  if (trim(rest).empty()) throw std::invalid_argument("form vector: no targets");
  for (;;) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("form vector: target '" + trim(item) + "' needs O(a):form");
    FormTarget t;
    t.twist = parse_twist(item.substr(0, colon));
    t.form = BinaryForm::parse(item.substr(colon + 1), t.twist - v.source_twist);
    v.targets.push_back(std::move(t));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return v;
}

void FormVector::validate() const {
  if (targets.empty()) throw std::invalid_argument("form vector: no targets");
  for (const auto& t : targets) {
    const std::int64_t want = t.twist - source_twist;
    if (t.form.degree != want || static_cast<std::int64_t>(t.form.coeffs.size()) != dim_s(want))
      throw std::invalid_argument("form vector: form for O(" + std::to_string(t.twist) +
                                  ") must have degree " + std::to_string(want));
  }
}

bool FormVector::is_zero() const {
  return std::all_of(targets.begin(), targets.end(), [](const auto& t) { return t.form.is_zero(); });
}

std::int64_t FormVector::target_degree() const {
  std::int64_t s = 0;
  for (const auto& t : targets) s += t.twist;
  return s;
}

std::string FormVector::to_string() const {
  std::ostringstream os;
  os << "O(" << source_twist << ") ->";
  for (std::size_t i = 0; i < targets.size(); ++i)
    os << (i ? ", " : " ") << "O(" << targets[i].twist << "):" << targets[i].form.to_string();
  return os.str();
}

// ---- SplitBundle ---------------------------------------------------------------

SplitBundle::SplitBundle(std::vector<std::int64_t> twists) : twists_(std::move(twists)) {
  std::sort(twists_.begin(), twists_.end(), std::greater<>());
}

std::int64_t SplitBundle::degree() const {
  return std::accumulate(twists_.begin(), twists_.end(), std::int64_t{0});
}

std::string SplitBundle::to_string() const {
  if (twists_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < twists_.size();) {
    std::size_t j = i;
    while (j < twists_.size() && twists_[j] == twists_[i]) ++j;
    if (!out.empty()) out += " + ";
    out += "O(" + std::to_string(twists_[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string SplitResult::to_string() const {
  if (!has_torsion()) return bundle.to_string();
  return "torsion(" + std::to_string(torsion) + ") + " + bundle.to_string();
}

// ---- cohomology ----------------------------------------------------------------

std::int64_t h0_twist(const FormVector& v, std::int64_t m) {
  v.validate();
  if (v.is_zero()) throw std::invalid_argument("h0_twist: the zero map has no bundle cokernel");
  std::int64_t h = 0;
  for (const auto& t : v.targets) h += dim_s(t.twist + m);
  h -= static_cast<std::int64_t>(rank(section_map(v, m)));
  const std::int64_t h1_source = dim_s(-v.source_twist - m - 2);
  if (h1_source > 0) h += h1_source - static_cast<std::int64_t>(rank(dual_map(v, -m - 2)));
  return h;
}

BinaryForm common_divisor(const FormVector& v) {
  std::int64_t xmult = -1;
  UPoly g;
  bool first = true;
  for (const auto& t : v.targets) {
    if (t.form.is_zero()) continue;
    const std::int64_t mu = t.form.x_multiplicity();
    xmult = xmult < 0 ? mu : std::min(xmult, mu);
    UPoly p(t.form.coeffs.begin(), t.form.coeffs.end());
    g = first ? u_gcd(p, {}) : u_gcd(g, p);
    first = false;
  }
  if (first) throw std::invalid_argument("common_divisor: the zero map");
  const auto ydeg = static_cast<std::int64_t>(g.size()) - 1;
  BinaryForm h = BinaryForm::zero(ydeg);
  for (std::size_t k = 0; k < g.size(); ++k) h.coeffs[k] = g[k];
  return BinaryForm::monomial(xmult, 0) * h;
}

SplitResult splitting_type(const FormVector& v) {
  v.validate();
  if (v.is_zero()) throw std::invalid_argument("splitting_type: the zero map is not injective");
  const BinaryForm g = common_divisor(v);

  FormVector red;
  red.source_twist = v.source_twist + g.degree;
  for (const auto& t : v.targets) {
    const BinaryForm f =
        t.form.is_zero() ? BinaryForm::zero(t.twist - red.source_twist) : exact_divide(t.form, g);
    red.targets.push_back({t.twist, f});
  }

  SplitResult out;
  out.torsion = g.degree;
  const auto rk = static_cast<std::int64_t>(red.targets.size()) - 1;
  const std::int64_t deg = red.target_degree() - red.source_twist;
  if (rk == 0) {
    if (deg != 0) throw std::logic_error("splitting_type: rank-0 cokernel with nonzero degree");
    return out;
  }

  std::int64_t lo = red.targets.front().twist;
  for (const auto& t : red.targets) lo = std::min(lo, t.twist);
  const std::int64_t hi = deg - (rk - 1) * lo;

  // #{b_j >= k} = h(-k) - h(-k-1)
  std::vector<std::int64_t> twists;
  std::int64_t prev = 0;
  std::int64_t h_above = h0_twist(red, -hi - 1);
  for (std::int64_t k = hi; k >= lo; --k) {
    const std::int64_t h_here = h0_twist(red, -k);
    const std::int64_t count = h_here - h_above - prev;
    if (count < 0) throw std::logic_error("splitting_type: Hilbert function is not convex");
    twists.insert(twists.end(), static_cast<std::size_t>(count), k);
    prev += count;
    h_above = h_here;
  }
  out.bundle = SplitBundle(std::move(twists));
  if (out.bundle.rank() != rk || out.bundle.degree() != deg)
    throw std::logic_error("splitting_type: rank/degree not conserved for " + v.to_string());
  return out;
}

bool more_balanced(const SplitBundle& a, const SplitBundle& b) {
  if (a.rank() != b.rank() || a.degree() != b.degree())
    throw std::invalid_argument("more_balanced: rank and degree must agree");
  std::int64_t sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.twists().size(); ++i) {
    sa += a.twists()[i];
    sb += b.twists()[i];
    if (sa > sb) return false;
  }
  return true;
}

// ---- strata ----------------------------------------------------------------------

std::string_view stratum_name(Stratum s) {
  switch (s) {
    case Stratum::injective: return "injective";
    case Stratum::zero_on_one_factor: return "zero-on-one-factor";
    case Stratum::zero: return "zero";
  }
  return "?";
}

Stratum classify_stratum(const FormVector& v) {
  if (v.targets.size() < 2 || v.targets[0].twist != v.source_twist + 1 ||
      v.targets[1].twist != v.source_twist + 1)
    throw std::invalid_argument("classify_stratum: first two targets must be O(m0+1)");
  const QMatrix block{v.targets[0].form.coeffs, v.targets[1].form.coeffs};
  switch (rank(block)) {
    case 2: return Stratum::injective;
    case 1: return Stratum::zero_on_one_factor;
    default: return Stratum::zero;
  }
}

FormVector stratum_representative(int n, Stratum s) {
  if (n < 3) throw std::invalid_argument("stratum_representative: n must be at least 3");
  const BinaryForm x = BinaryForm::monomial(1, 0);
  const BinaryForm y = BinaryForm::monomial(0, 1);
  const BinaryForm xx = BinaryForm::monomial(2, 0);
  const BinaryForm xy = BinaryForm::monomial(1, 1);
  const BinaryForm yy = BinaryForm::monomial(0, 2);

  FormVector v;
  v.source_twist = 0;
  std::vector<BinaryForm> quadrics;
  switch (s) {
    case Stratum::injective:
      v.targets = {{1, x}, {1, y}};
      quadrics = {xx, xy, yy};
      break;
    case Stratum::zero_on_one_factor:
      v.targets = {{1, BinaryForm::zero(1)}, {1, x}};
      quadrics = {yy, xx, xy};
      break;
    case Stratum::zero:
      v.targets = {{1, BinaryForm::zero(1)}, {1, BinaryForm::zero(1)}};
      quadrics = {xx, xy, yy};
      break;
  }
  for (int i = 0; i < n - 2; ++i) v.targets.push_back({2, quadrics[static_cast<std::size_t>(i) % 3]});
  return v;
}

std::optional<SplitBundle> expected_stratum_bundle(int n, Stratum s) {
  switch (s) {
    case Stratum::injective: return SplitBundle(std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), 2));
    case Stratum::zero_on_one_factor: {
      std::vector<std::int64_t> t(static_cast<std::size_t>(n - 3), 2);
      t.push_back(1);
      t.push_back(3);
      return SplitBundle(std::move(t));
    }
    case Stratum::zero: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<StratumResult> strata_enumerate(int n) {
  if (n < 4) throw std::invalid_argument("strata_enumerate: n must be at least 4");
  std::vector<StratumResult> out;
  const std::pair<Stratum, const char*> rows[] = {
      {Stratum::injective, "phi injective as a bundle map"},
      {Stratum::zero_on_one_factor, "phi zero on one O(1) factor"},
      {Stratum::zero, "phi = 0"},
  };
  for (const auto& [s, text] : rows) {
    StratumResult r;
    r.stratum = s;
    r.description = text;
    r.representative = stratum_representative(n, s);
    if (classify_stratum(r.representative) == Stratum::zero) r.contradiction = true;
    else r.splitting = splitting_type(r.representative);
    out.push_back(std::move(r));
  }
  return out;
}

FormVector case12_map(int n) {
  if (n < 3) throw std::invalid_argument("case12_map: n must be at least 3");
  FormVector v;
  v.source_twist = 1;
  v.targets = {{1, BinaryForm::constant(1)}, {1, BinaryForm::constant(0)}};
  for (int i = 0; i < n - 2; ++i) v.targets.push_back({2, BinaryForm::zero(1)});
  return v;
}

GenericityReport genericity_recheck(int n, Stratum s, std::uint64_t seed, int draws) {
  if (s == Stratum::zero) throw std::invalid_argument("genericity_recheck: nothing to check on the zero stratum");
  const auto expected = expected_stratum_bundle(n, s);
  std::mt19937_64 rng(seed + 1000003ULL * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(s));
  auto draw_form = [&](std::int64_t degree) {
    BinaryForm f = BinaryForm::zero(degree);
    for (auto& c : f.coeffs) c = static_cast<long>(rng() % 11) - 5;
    return f;
  };

  GenericityReport rep;
  rep.stratum = s;
  for (int i = 0; i < draws; ++i) {
    ++rep.draws;
    FormVector v;
    v.targets.push_back({1, s == Stratum::injective ? draw_form(1) : BinaryForm::zero(1)});
    v.targets.push_back({1, draw_form(1)});
    for (int k = 0; k < n - 2; ++k) v.targets.push_back({2, draw_form(2)});
    if (v.is_zero() || classify_stratum(v) != s) {
      ++rep.skipped;
      continue;
    }
    const SplitResult r = splitting_type(v);
    if (r.has_torsion()) {
      ++rep.skipped;
      continue;
    }
    if (r.bundle == *expected && oracle_splitting_type(v) == r) ++rep.agreed;
  }
  return rep;
}

// ---- restricted cotangent --------------------------------------------------------

CotangentDecomposition restricted_cotangent_decomposition(int n, std::int64_t d) {
  if (n < 3 || d < 1)
    throw std::invalid_argument("restricted_cotangent_decomposition: need n >= 3, d >= 1");
  CotangentDecomposition out;
  out.n = n;
  out.d = d;
  for (int i = 0; i < n - 2; ++i) out.summands.push_back({1, d});
  out.normalized_rank2_degree = d - 2;
  // S(P): rank 2, degree (d-2) + 2 deg P.
  out.summands.push_back({2, out.normalized_rank2_degree + 2});
  for (const auto& s : out.summands) {
    out.total_rank += s.rank;
    out.total_c1 += s.degree;
  }
  out.expected_c1 = (n - 1) * d;
  out.ruled_invariant = -out.normalized_rank2_degree;
  if (d == 3) out.note = "plane cubic: P(S) is an elliptic ruled surface of invariant -1";
  out.consistent = out.total_rank == n && out.total_c1 == out.expected_c1;
  return out;
}

}  // namespace linecong
