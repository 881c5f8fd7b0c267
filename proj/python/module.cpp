#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>

#include "linecong/classify.hpp"
#include "linecong/linecase.hpp"
#include "linecong/normal.hpp"
#include "linecong/p1split.hpp"
#include "linecong/p1split_oracle.hpp"
#include "linecong/report.hpp"
#include "linecong/verify.hpp"

namespace py = pybind11;
using namespace linecong;

namespace {

py::object opt(const std::optional<std::int64_t>& v) {
  return v ? py::object(py::int_(*v)) : py::object(py::none());
}

py::dict solution_dict(const CongruenceSolution& r) {
  py::dict d;
  d["e"] = opt(r.e);
  d["d"] = opt(r.d);
  d["g"] = opt(r.g);
  d["D"] = opt(r.D);
  d["a"] = opt(r.a);
  d["b"] = opt(r.b);
  d["status"] = std::string(status_name(r.status));
  d["reason"] = r.reason;
  d["anchor"] = r.anchor;
  return d;
}

VerifyOptions options(int n_lo, int n_hi, std::int64_t d_max, std::uint64_t seed,
                      const std::optional<std::string>& mutate) {
  VerifyOptions o;
  o.n_lo = n_lo;
  o.n_hi = n_hi;
  o.d_max = d_max;
  o.seed = seed;
  if (mutate) {
    if (*mutate == "euler") o.recipe.euler_offset = 1;
    else if (*mutate == "tangent") o.recipe.divide_by_tangent = false;
    else if (*mutate == "pushout") o.recipe.pushout_twist_sign = -1;
    else throw std::invalid_argument("mutate must be euler, tangent or pushout");
  }
  return o;
}

py::dict split_dict(const SplitResult& r) {
  py::dict d;
  d["torsion"] = r.torsion;
  d["twists"] = r.bundle.twists();
  d["rank"] = r.bundle.rank();
  d["degree"] = r.bundle.degree();
  d["text"] = r.to_string();
  return d;
}

OutputFormat fmt_of(const std::string& f) {
  if (f == "json") return OutputFormat::json;
  if (f == "markdown") return OutputFormat::markdown;
  throw std::invalid_argument("format must be json or markdown");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact intersection-theory checks for line congruences";
  m.attr("__version__") = std::string(version());
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  m.def("cn1", [](int n) { return chern_normal(n).chern(n - 1).to_string(); }, py::arg("n"),
        "c_{n-1}(N) as text.");
  m.def("cn1_matches_closed_form", [](int n) { return chern_normal(n).chern(n - 1) == cn1_closed_form(n); },
        py::arg("n"));
  m.def("degree_cn1", [](int n) { return degree_cn1(n).to_string(); }, py::arg("n"));
  m.def("double_point_relation", [](int n) { return double_point_relation(n).to_string(); }, py::arg("n"));
  m.def("porteous_a", [](int n) { return porteous_a(n).to_string(); }, py::arg("n"));
  m.def("plane_relation_unit", [] { return plane_relation_identity().unit; });
  m.def("check_c_prime_square", [](int n) { return check_c_prime_square(n).to_string(); }, py::arg("n"));

  m.def(
      "verify",
      [](int n_lo, int n_hi, std::int64_t d_max, std::uint64_t seed, std::optional<std::string> mutate) {
        py::list out;
        for (const auto& c : run_identity_suite(options(n_lo, n_hi, d_max, seed, mutate))) {
          py::dict d;
          d["check"] = c.name;
          d["n"] = c.n ? py::object(py::int_(c.n)) : py::object(py::none());
          d["passed"] = c.passed;
          d["anchor"] = c.anchor;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("n_lo") = 3, py::arg("n_hi") = 12, py::arg("d_max") = 50, py::arg("seed") = kDefaultSeed,
      py::arg("mutate") = py::none());

  m.def(
      "classify",
      [](std::int64_t d_max, bool diagnostics) {
        auto rows = classification_table(d_max);
        if (diagnostics) {
          auto neg = negative_divisor_scan(d_max);
          rows.insert(rows.end(), neg.begin(), neg.end());
        }
        py::list out;
        for (const auto& r : rows) out.append(solution_dict(r));
        return out;
      },
      py::arg("d_max") = 50, py::arg("diagnostics") = false);

  m.def(
      "classify_report",
      [](std::int64_t d_max, const std::string& format) {
        return render_classify({3, 12, d_max, kDefaultSeed}, classification_table(d_max), fmt_of(format));
      },
      py::arg("d_max") = 50, py::arg("format") = "json");

  m.def(
      "planarity",
      [](std::int64_t d_max) {
        const PlanarityReport r = planarity_evidence(d_max);
        py::dict d;
        d["tuples_scanned"] = r.tuples_scanned;
        d["integral_genus"] = r.integral_genus.size();
        d["counterexamples"] = r.counterexamples.size();
        d["counterexamples_passing_hurwitz"] = r.counterexamples_passing_hurwitz();
        return d;
      },
      py::arg("d_max") = 20);

  m.def(
      "linecase",
      [](int n, std::int64_t alpha, std::int64_t beta, std::int64_t gamma) {
        const LineCaseResult r = classify_line_congruence(n, {alpha, beta, gamma});
        py::dict d;
        d["case"] = std::string(line_case_name(r.kind));
        d["w"] = py::make_tuple(r.w.first, r.w.second);
        d["a"] = opt(r.a);
        d["b"] = opt(r.b);
        d["hypersurface_degree"] = opt(r.hypersurface_degree);
        d["residual_degree"] = opt(r.residual_degree);
        d["delegated"] = r.delegated;
        d["detail"] = r.detail;
        return d;
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"));

  m.def(
      "split",
      [](const std::string& text) {
        const FormVector v = FormVector::parse(text);
        py::dict d = split_dict(splitting_type(v));
        d["oracle"] = split_dict(oracle_splitting_type(v));
        d["input"] = v.to_string();
        return d;
      },
      py::arg("form_vector"), "Splitting type of the cokernel of O(m0) -> sum O(a_i).");

  m.def(
      "h0_twist", [](const std::string& text, std::int64_t twist) { return h0_twist(FormVector::parse(text), twist); },
      py::arg("form_vector"), py::arg("m"));

  m.def(
      "strata",
      [](int n) {
        py::list out;
        for (const auto& s : strata_enumerate(n)) {
          py::dict d;
          d["stratum"] = std::string(stratum_name(s.stratum));
          d["representative"] = s.representative.to_string();
          d["splitting"] = s.splitting ? py::object(py::str(s.splitting->to_string())) : py::object(py::none());
          d["contradiction"] = s.contradiction;
          out.append(d);
        }
        return out;
      },
      py::arg("n"));
}
