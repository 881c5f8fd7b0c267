#include "linecong/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "linecong/classify.hpp"
#include "linecong/linecase.hpp"
#include "linecong/p1split.hpp"
#include "linecong/p1split_oracle.hpp"

namespace linecong {

namespace {

namespace anchor {
constexpr const char* kCn1 =
    "c_{n-1}(N) = (e+1)t^{n-1} + (5e-ne-n+3)Lt^{n-2} + (e+1)Kt^{n-2} - Dt^{n-2}";
constexpr const char* kDegree = "deg c_{n-1}(N) = (4e^2+2e)d + e(e+1)(2g-2) - (2e+1)D";
constexpr const char* kDoublePoint =
    "a^2 + b^2 - deg c_{n-1}(N) = 2d^2e^2 - 4de^2 - 2e^2g - 2de - 2eg + 2e^2 + 2e + "
    "D(1+2e-2de) + D^2";
constexpr const char* kDelta = "Delta_1^{(i)}(F) = t^i - (i-1)Lt^{i-1}";
constexpr const char* kPorteous = "a = ed - D";
constexpr const char* kCPrime = "C'^2 = Y^2 . Y_0 = 0";
constexpr const char* kDims = "(n^2+n-4)/2 = (n-2)(n+3)/2 + 1";
constexpr const char* kStrata = "O(2)^{n-1}; O(3) + O(2)^{n-3} + O(1); phi = 0 impossible";
constexpr const char* kCase12 = "O(1) -> O(1)^2 + O(2)^{n-2} has cokernel O(1) + O(2)^{n-2}";
constexpr const char* kGeneric = "random maps in a stratum give its splitting type";
constexpr const char* kLine = "b = a on (a,a,a); b = a-1 on (a,a,a+1)";
constexpr const char* kPlane = "de(d-1)(e-1) = D(2de-D-2e-1)";
constexpr const char* kIndependent = "the double-point relation does not involve n";
constexpr const char* kAffine = "L-coefficient of c_{n-1}(N) = 5e+3 - n(e+1)";
constexpr const char* kSubst = "numbers first = symbols first";
constexpr const char* kPlanarity = "Castelnuovo pi(d, r) rules out non-plane fundamental curves";
constexpr const char* kOracle = "Hilbert-function splitting = syzygy-generator splitting";
}  // namespace anchor

std::string mismatch(const std::string& got, const std::string& want) {
  return "got " + got + ", expected " + want;
}

// Runs `body`, turning exceptions into a failed check.
CheckResult run(const std::string& name, int n, const char* anchor,
                const std::function<bool(std::string&)>& body) {
  CheckResult r{name, n, anchor, false, {}};
  try {
    r.passed = body(r.detail);
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  return r;
}

ChowElement delta_expected(int n, int i) {
  return ChowElement::homogeneous(n, i, 1, ParamPoly(-(i - 1)) * CurveClass::hyperplane());
}

void per_n_checks(int n, const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const CongruenceData data = CongruenceData::symbolic();
  const NormalRecipe& rc = opt.recipe;

  out.push_back(run("cn1-closed-form", n, anchor::kCn1, [&](std::string& detail) {
    const ChowElement got = chern_normal(n, data, rc).chern(n - 1);
    const ChowElement want = cn1_closed_form(n);
    detail = got == want ? "matches" : mismatch(got.to_string(), want.to_string());
    return got == want;
  }));

  out.push_back(run("cn1-degree", n, anchor::kDegree, [&](std::string& detail) {
    const ParamPoly got = degree_cn1(n, data, rc);
    const ParamPoly want = degree_cn1_closed_form();
    detail = got == want ? got.to_string() : mismatch(got.to_string(), want.to_string());
    return got == want;
  }));

  out.push_back(run("double-point-relation", n, anchor::kDoublePoint, [&](std::string& detail) {
    const ParamPoly got = double_point_relation(n, data, rc);
    const ParamPoly want = double_point_relation_closed_form();
    detail = got == want ? "matches" : mismatch(got.to_string(), want.to_string());
    return got == want;
  }));

  out.push_back(run("porteous-delta", n, anchor::kDelta, [&](std::string& detail) {
    const BundleClass f = pushout_bundle(n, data, rc);
    for (int i = 1; i <= n - 1; ++i) {
      const ChowElement det = schur_delta1(i, f);
      const ChowElement rec = schur_delta1_recursive(i, f);
      const ChowElement want = delta_expected(n, i);
      if (det != want || rec != want) {
        detail = "i = " + std::to_string(i) + ": " + mismatch(det.to_string(), want.to_string());
        return false;
      }
    }
    detail = "i = 1.." + std::to_string(n - 1) + ", determinant and recursion agree";
    return true;
  }));

  out.push_back(run("porteous-a", n, anchor::kPorteous, [&](std::string& detail) {
    const ParamPoly got = porteous_a(n, data, rc);
    const ParamPoly want = ParamPoly::parse("ed - D");
    detail = got == want ? got.to_string() : mismatch(got.to_string(), want.to_string());
    return got == want;
  }));

  out.push_back(run("c-prime-square", n, anchor::kCPrime, [&](std::string& detail) {
    const ParamPoly got = check_c_prime_square(n);
    detail = got.to_string();
    return got.is_zero();
  }));

  out.push_back(run("dim-counts-36", n, anchor::kDims, [&](std::string& detail) {
    const DimCounts36 dc = dim_counts_36(n);
    std::ostringstream os;
    os << "h0 " << dc.h0_base << " (summands " << dc.h0_base_from_summands << "), image "
       << dc.fiber_image_dim << ", quadrics " << dc.quadric_system_dim;
    detail = os.str();
    return dc.consistent;
  }));

  out.push_back(run("line-trichotomy", n, anchor::kLine, [&](std::string& detail) {
    int ci = 0, linked = 0;
    for (std::int64_t a = 0; a <= 6; ++a)
      for (std::int64_t b = 0; b <= 6; ++b)
        for (std::int64_t g = 0; g <= 6; ++g) {
          const LineCaseResult r = classify_line_congruence(n, {a, b, g});
          const bool is_ci = a >= 1 && b == a && g == a;
          const bool is_linked = a >= 1 && b == a && g == a + 1;
          if ((r.kind == LineCaseKind::complete_intersection) != is_ci) return false;
          if ((r.kind == LineCaseKind::linked_through_vertex) != is_linked) return false;
          if (is_ci && (*r.b != *r.a || *r.hypersurface_degree != a)) return false;
          if (is_linked && (*r.b != *r.a - 1 || *r.residual_degree != n - 2 ||
                            *r.hypersurface_degree != a + 1))
            return false;
          if (n >= 4 && r.kind == LineCaseKind::linked_to_point_plane) return false;
          ci += is_ci;
          linked += is_linked;
        }
    detail = std::to_string(ci) + " complete intersections, " + std::to_string(linked) +
             " linked through the vertex in [0,6]^3";
    return true;
  }));

  if (n >= 4) {
    out.push_back(run("split-strata", n, anchor::kStrata, [&](std::string& detail) {
      const auto strata = strata_enumerate(n);
      std::string text;
      for (const auto& s : strata) {
        if (!text.empty()) text += "; ";
        const auto want = expected_stratum_bundle(n, s.stratum);
        if (!want) {
          if (!s.contradiction) return false;
          text += "contradiction";
          continue;
        }
        if (!s.splitting || s.splitting->has_torsion() || s.splitting->bundle != *want) return false;
        if (oracle_splitting_type(s.representative) != *s.splitting) return false;
        text += s.splitting->to_string();
      }
      const SplitBundle& generic = strata[0].splitting->bundle;
      const SplitBundle& degenerate = strata[1].splitting->bundle;
      if (!more_balanced(generic, degenerate) || more_balanced(degenerate, generic)) return false;
      detail = text;
      return true;
    }));
  }

  out.push_back(run("split-case12", n, anchor::kCase12, [&](std::string& detail) {
    const FormVector v = case12_map(n);
    const SplitResult got = splitting_type(v);
    std::vector<std::int64_t> tw(static_cast<std::size_t>(n - 2), 2);
    tw.push_back(1);
    const SplitResult want{0, SplitBundle(tw)};
    detail = got.to_string();
    return got == want && oracle_splitting_type(v) == got;
  }));

  if (n >= 4) {
    out.push_back(run("split-genericity", n, anchor::kGeneric, [&](std::string& detail) {
      const auto gi = genericity_recheck(n, Stratum::injective, opt.seed, 10);
      const auto gz = genericity_recheck(n, Stratum::zero_on_one_factor, opt.seed, 10);
      detail = "injective " + std::to_string(gi.agreed) + "/" + std::to_string(gi.draws) +
               ", degenerate " + std::to_string(gz.agreed) + "/" + std::to_string(gz.draws) +
               " (rest skipped)";
      return gi.ok() && gz.ok();
    }));
  }
}

}  // namespace

std::vector<CheckResult> run_identity_suite(const VerifyOptions& opt) {
  if (opt.n_lo < 3 || opt.n_lo > opt.n_hi)
    throw std::invalid_argument("run_identity_suite: need 3 <= n_lo <= n_hi");
  if (opt.d_max < 3) throw std::invalid_argument("run_identity_suite: d_max must be at least 3");

  std::vector<CheckResult> out;
  for (int n = opt.n_lo; n <= opt.n_hi; ++n) per_n_checks(n, opt, out);

  const CongruenceData data = CongruenceData::symbolic();
  const NormalRecipe& rc = opt.recipe;

  out.push_back(run("plane-relation", 0, anchor::kPlane, [&](std::string& detail) {
    const PlaneRelationIdentity id = plane_relation_identity(rc);
    detail = "unit " + std::to_string(id.unit);
    return true;
  }));

  out.push_back(run("n-independence", 0, anchor::kIndependent, [&](std::string& detail) {
    const ParamPoly first = double_point_relation(opt.n_lo, data, rc);
    for (int n = opt.n_lo + 1; n <= opt.n_hi; ++n)
      if (double_point_relation(n, data, rc) != first) {
        detail = "differs at n = " + std::to_string(n);
        return false;
      }
    detail = first.to_string();
    return first == double_point_relation_closed_form();
  }));

  out.push_back(run("l-coefficient-affine", 0, anchor::kAffine, [&](std::string& detail) {
    const ParamPoly e = sym::e();
    for (int n = opt.n_lo; n <= opt.n_hi; ++n) {
      const ParamPoly coeff = chern_normal(n, data, rc).chern(n - 1).curve_coeff(n - 1).L;
      const ParamPoly intercept = coeff + ParamPoly(n) * (e + 1);
      if (intercept != 5 * e + 3) {
        detail = "n = " + std::to_string(n) + ": coefficient " + coeff.to_string();
        return false;
      }
    }
    detail = "intercept 5*e + 3, slope -e - 1";
    return true;
  }));

  out.push_back(run("substitution-first", 0, anchor::kSubst, [&](std::string& detail) {
    std::mt19937_64 rng(opt.seed);
    auto pick = [&](long lo, long hi) {
      return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    const int n_top = std::min(opt.n_hi, 6);
    const ParamPoly deg = degree_cn1_closed_form();
    const ParamPoly rel = double_point_relation_closed_form();
    const ParamPoly a_sym = ParamPoly::parse("ed - D");
    for (int i = 0; i < 50; ++i) {
      const int n = opt.n_lo + static_cast<int>(pick(0, std::max(0, n_top - opt.n_lo)));
      ParamValues at;
      at.d = pick(1, 12);
      at.g = pick(0, 10);
      at.e = pick(1, 4);
      at.D = pick(0, 20);
      const CongruenceData num = CongruenceData::numeric(at);
      const bool ok = degree_cn1(n, num, rc).evaluate(at) == deg.evaluate(at) &&
                      double_point_relation(n, num, rc).evaluate(at) == rel.evaluate(at) &&
                      porteous_a(n, num, rc).evaluate(at) == a_sym.evaluate(at);
      if (!ok) {
        std::ostringstream os;
        os << "n=" << n << " d=" << at.d << " g=" << at.g << " e=" << at.e << " D=" << at.D;
        detail = os.str();
        return false;
      }
    }
    detail = "50 tuples";
    return true;
  }));

  out.push_back(run("planarity", 0, anchor::kPlanarity, [&](std::string& detail) {
    const PlanarityReport rep = planarity_evidence(opt.d_max);
    detail = std::to_string(rep.integral_genus.size()) + " integral-genus tuples up to d = " +
             std::to_string(opt.d_max) + ", " + std::to_string(rep.counterexamples.size()) +
             " non-plane candidates";
    return rep.counterexamples_passing_hurwitz() == 0;
  }));

  out.push_back(run("split-oracle-suite", 0, anchor::kOracle, [&](std::string& detail) {
    const auto suite = oracle_suite(opt.seed, 200);
    int torsion = 0;
    for (const auto& v : suite) {
      const SplitResult got = splitting_type(v);
      if (got != oracle_splitting_type(v)) {
        detail = "disagree on " + v.to_string();
        return false;
      }
      const auto rk = static_cast<std::int64_t>(v.targets.size()) - 1;
      if (got.bundle.rank() != rk ||
          got.bundle.degree() + got.torsion != v.target_degree() - v.source_twist)
        return false;
      torsion += got.has_torsion();
    }
    detail = std::to_string(suite.size()) + " maps, " + std::to_string(torsion) + " with torsion";
    return true;
  }));

  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

}  // namespace linecong
