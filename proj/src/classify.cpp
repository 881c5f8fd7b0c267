#include "linecong/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <iterator>
#include <string>
#include <tuple>

namespace linecong {

std::string_view status_name(SolutionStatus s) {
  switch (s) {
    case SolutionStatus::survives: return "survives";
    case SolutionStatus::eliminated: return "eliminated";
    case SolutionStatus::delegated: return "delegated";
  }
  return "?";
}

SolutionStatus parse_status(std::string_view s) {
  if (s == "survives") return SolutionStatus::survives;
  if (s == "eliminated") return SolutionStatus::eliminated;
  if (s == "delegated") return SolutionStatus::delegated;
  throw std::invalid_argument("unknown status: " + std::string(s));
}

bool satisfies_plane_relation(std::int64_t d, std::int64_t e, std::int64_t D) {
  return d * e * (d - 1) * (e - 1) == D * (2 * d * e - D - 2 * e - 1);
}

mpq_class genus_from_relation(std::int64_t d, std::int64_t e, std::int64_t D) {
  if (e < 1) throw std::invalid_argument("genus_from_relation: e must be positive");
  const mpz_class dz = d;
  const mpz_class ez = e;
  const mpz_class Dz = D;
  const mpz_class num = 2 * dz * dz * ez * ez - 4 * dz * ez * ez - 2 * dz * ez + 2 * ez * ez +
                        2 * ez + Dz * (1 + 2 * ez - 2 * dz * ez) + Dz * Dz;
  mpq_class g(num, mpz_class(2 * ez * ez + 2 * ez));
  g.canonicalize();
  return g;
}

std::int64_t castelnuovo_bound(std::int64_t d, std::int64_t r) {
  if (d < 1 || r < 2) throw std::invalid_argument("castelnuovo_bound: need d >= 1, r >= 2");
  const std::int64_t m = (d - 1) / (r - 1);
  const std::int64_t eps = d - 1 - m * (r - 1);
  return m * (m - 1) * (r - 1) / 2 + m * eps;
}

std::size_t PlanarityReport::counterexamples_passing_hurwitz() const {
  return static_cast<std::size_t>(std::count_if(counterexamples.begin(), counterexamples.end(),
                                                [](const auto& c) { return c.passes_hurwitz; }));
}

PlanarityReport planarity_evidence(std::int64_t d_max) {
  if (d_max < 3) throw std::invalid_argument("planarity_evidence: d_max must be at least 3");
  PlanarityReport report;
  report.d_max = d_max;
  for (std::int64_t e = 1; e <= 3; ++e) {
    for (std::int64_t d = 3; d <= d_max; ++d) {
      for (std::int64_t D = 0; D <= e * d - 1; ++D) {
        ++report.tuples_scanned;
        const mpq_class g = genus_from_relation(d, e, D);
        if (g.get_den() != 1 || g < 0) continue;
        PlanarityCandidate c;
        c.e = e;
        c.d = d;
        c.D = D;
        c.g = g.get_num().get_si();
        c.a = e * d - D;
        c.b = e * d;
        c.passes_hurwitz = c.b <= 2 * c.a;
        for (std::int64_t r = 3; r <= d; ++r)
          if (c.g <= castelnuovo_bound(d, r)) c.admissible_r.push_back(r);
        if (!c.admissible_r.empty()) report.counterexamples.push_back(c);
        report.integral_genus.push_back(std::move(c));
      }
    }
  }
  return report;
}

namespace {

std::int64_t plane_genus(std::int64_t d) { return (d - 1) * (d - 2) / 2; }

CongruenceSolution make_row(std::int64_t e, std::int64_t d, std::int64_t D) {
  CongruenceSolution row;
  row.e = e;
  row.d = d;
  row.g = plane_genus(d);
  row.D = D;
  row.a = e * d - D;
  row.b = e * d;
  return row;
}

void label(CongruenceSolution& row) {
  const std::int64_t e = *row.e;
  const std::int64_t d = *row.d;
  const std::int64_t D = *row.D;
  const std::int64_t a = *row.a;
  const std::int64_t b = *row.b;

  auto eliminate = [&](std::string_view why, std::string_view anchor) {
    row.status = SolutionStatus::eliminated;
    row.reason = why;
    row.anchor = anchor;
  };

  if (d == 1) {
    eliminate(reason::kLine, "d = 1: the fundamental curve is a line");
    row.status = SolutionStatus::delegated;
    return;
  }
  if (a < 1) {
    eliminate(reason::kAPositive, "a = ed - D >= 1");
    return;
  }
  if (b > 2 * a) {
    eliminate(reason::kHurwitz, "b <= 2a");
    return;
  }
  if (e == 1 && D == 0 && d > 3) {
    eliminate(reason::kDBound, "e = 1, D = 0 => d <= 3");
    return;
  }
  if (e == 2 && a > 3) {
    eliminate(reason::kABound, "e = 2 => a <= 3");
    return;
  }
  if (e == 3 && a > 6) {
    eliminate(reason::kABound, "e = 3 => a <= 6");
    return;
  }

  row.status = SolutionStatus::survives;
  row.anchor = "de(d-1)(e-1) = D(2de-D-2e-1)";
  if (e == 1 && d == 2) row.reason = reason::kConic;
  else if (e == 1 && d == 3 && D == 0) row.reason = reason::kCubicScroll;
  else if (e == 2 && d == 3 && D == 3) row.reason = reason::kCubicQuadricCones;
  else row.reason = reason::kUnexplained;
}

bool row_order(const CongruenceSolution& x, const CongruenceSolution& y) {
  // Rows without numbers (delegated cases) first, in insertion order.
  const bool xn = x.e.has_value();
  const bool yn = y.e.has_value();
  if (xn != yn) return !xn;
  if (!xn) return false;
  return std::tie(*x.e, *x.d, *x.D) < std::tie(*y.e, *y.d, *y.D);
}

}  // namespace

std::vector<CongruenceSolution> enumerate_solutions(std::int64_t e, std::int64_t d_max) {
  if (e < 1 || e > 3)
    throw std::invalid_argument("enumerate_solutions: unsupported cone degree e = " +
                                std::to_string(e) + " (b <= 2a forces e <= 3)");
  if (d_max < 3) throw std::invalid_argument("enumerate_solutions: d_max must be at least 3");
  std::vector<CongruenceSolution> rows;
  for (std::int64_t d = 1; d <= d_max; ++d) {
    for (std::int64_t D = 0; D <= e * d - 1; ++D) {
      if (!satisfies_plane_relation(d, e, D)) continue;
      CongruenceSolution row = make_row(e, d, D);
      label(row);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<CongruenceSolution> negative_divisor_scan(std::int64_t d_max) {
  std::vector<CongruenceSolution> rows;
  for (std::int64_t e = 1; e <= 3; ++e) {
    for (std::int64_t d = 1; d <= d_max; ++d) {
      for (std::int64_t D = -e * d; D <= -1; ++D) {
        if (!satisfies_plane_relation(d, e, D)) continue;
        CongruenceSolution row = make_row(e, d, D);
        row.status = SolutionStatus::eliminated;
        row.reason = reason::kNegativeD;
        row.anchor = "D < 0";
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<CongruenceSolution> classification_table(std::int64_t d_max) {
  std::vector<CongruenceSolution> rows;

  CongruenceSolution bisecants;
  bisecants.status = SolutionStatus::delegated;
  bisecants.reason = reason::kBisecants;
  bisecants.anchor = "n = 3: bisecants of a twisted cubic or an elliptic quartic";
  rows.push_back(bisecants);

  CongruenceSolution line;
  line.d = 1;
  line.g = 0;
  line.status = SolutionStatus::delegated;
  line.reason = reason::kLine;
  line.anchor = "fundamental line: see the line-congruence classifier";
  rows.push_back(line);

  for (std::int64_t e = 1; e <= 3; ++e) {
    auto part = enumerate_solutions(e, d_max);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  std::stable_sort(rows.begin(), rows.end(), row_order);
  return rows;
}

std::vector<CongruenceSolution> survivors(const std::vector<CongruenceSolution>& rows) {
  std::vector<CongruenceSolution> out;
  std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
               [](const auto& r) { return r.status == SolutionStatus::survives; });
  return out;
}

}  // namespace linecong
