#include "linecong/p1split_oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace linecong {

namespace {

std::size_t dim_s(std::int64_t k) { return k >= 0 ? static_cast<std::size_t>(k + 1) : 0; }

struct Layout {
  std::vector<std::size_t> offset;
  std::vector<std::size_t> size;
  std::size_t total = 0;
};

// Coordinates of sum_i S_{p-a_i}.
Layout layout(const FormVector& v, std::int64_t p) {
  Layout l;
  for (const auto& t : v.targets) {
    l.offset.push_back(l.total);
    l.size.push_back(dim_s(p - t.twist));
    l.total += l.size.back();
  }
  return l;
}

// (g_i) -> sum g_i f_i in S_{p-m0}; rows are output coordinates.
QMatrix contraction(const FormVector& v, std::int64_t p, const Layout& l) {
  QMatrix m(dim_s(p - v.source_twist), QVector(l.total, 0));
  for (std::size_t i = 0; i < v.targets.size(); ++i) {
    const auto& f = v.targets[i].form.coeffs;
    for (std::size_t j = 0; j < l.size[i]; ++j)
      for (std::size_t k = 0; k < f.size(); ++k)
        if (f[k] != 0) m[j + k][l.offset[i] + j] += f[k];
  }
  return m;
}

std::vector<QVector> kernel(const FormVector& v, std::int64_t p, const Layout& l) {
  if (l.total == 0) return {};
  return nullspace(contraction(v, p, l), l.total);
}

// Multiply a syzygy of degree p-1 by x (shift 0) or y (shift 1).
QVector lift(const QVector& s, const Layout& from, const Layout& to, std::size_t shift) {
  QVector out(to.total, 0);
  for (std::size_t i = 0; i < from.size.size(); ++i)
    for (std::size_t j = 0; j < from.size[i]; ++j) out[to.offset[i] + j + shift] = s[from.offset[i] + j];
  return out;
}

}  // namespace

std::vector<std::int64_t> syzygy_generator_degrees(const FormVector& v) {
  v.validate();
  if (v.is_zero()) throw std::invalid_argument("oracle: the zero map");
  std::int64_t lo = v.targets.front().twist;
  for (const auto& t : v.targets) lo = std::min(lo, t.twist);
  const auto rk = static_cast<std::int64_t>(v.targets.size()) - 1;
  const std::int64_t hi = v.target_degree() - v.source_twist - (rk - 1) * lo;

  std::vector<std::int64_t> degrees;
  Layout prev_layout = layout(v, lo - 1);
  std::vector<QVector> prev_kernel = kernel(v, lo - 1, prev_layout);
  for (std::int64_t p = lo; p <= hi && static_cast<std::int64_t>(degrees.size()) < rk; ++p) {
    const Layout l = layout(v, p);
    std::vector<QVector> k = kernel(v, p, l);
    QMatrix generated;
    for (const auto& s : prev_kernel) {
      generated.push_back(lift(s, prev_layout, l, 0));
      generated.push_back(lift(s, prev_layout, l, 1));
    }
    const std::size_t fresh = k.size() - rank(std::move(generated));
    degrees.insert(degrees.end(), fresh, p);
    prev_layout = l;
    prev_kernel = std::move(k);
  }
  if (static_cast<std::int64_t>(degrees.size()) != rk)
    throw std::logic_error("oracle: found " + std::to_string(degrees.size()) +
                           " syzygy generators, expected " + std::to_string(rk));
  return degrees;
}

SplitResult oracle_splitting_type(const FormVector& v) {
  SplitResult out;
  out.bundle = SplitBundle(syzygy_generator_degrees(v));
  out.torsion = v.target_degree() - v.source_twist - out.bundle.degree();
  if (out.torsion < 0) throw std::logic_error("oracle: negative torsion length");
  return out;
}

std::vector<FormVector> oracle_suite(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto random_form = [&](std::int64_t degree) {
    BinaryForm f = BinaryForm::zero(degree);
    for (auto& c : f.coeffs) c = static_cast<long>(pick(-3, 3));
    return f;
  };

  std::vector<FormVector> out;
  while (static_cast<int>(out.size()) < count) {
    FormVector v;
    v.source_twist = pick(-1, 1);
    const std::int64_t targets = pick(1, 5);
    const bool common_factor = pick(0, 3) == 0;
    const BinaryForm ell = random_form(1);
    for (std::int64_t i = 0; i < targets; ++i) {
      FormTarget t;
      t.twist = pick(v.source_twist, 4);
      const std::int64_t deg = t.twist - v.source_twist;
      if (pick(0, 4) == 0) t.form = BinaryForm::zero(deg);
      else if (common_factor && deg >= 1) t.form = ell * random_form(deg - 1);
      else t.form = random_form(deg);
      v.targets.push_back(std::move(t));
    }
    if (v.is_zero()) continue;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace linecong
