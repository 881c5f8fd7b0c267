#include "linecong/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#ifndef LINECONG_VERSION
#define LINECONG_VERSION "0.0.0"
#endif

namespace linecong {

using json = nlohmann::ordered_json;

std::string_view version() { return LINECONG_VERSION; }

namespace {

json meta_json(const ReportMeta& m) {
  return json{{"n_range", {m.n_lo, m.n_hi}},
              {"d_max", m.d_max},
              {"seed", m.seed},
              {"version", std::string(version())}};
}

json opt_json(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

std::string opt_text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string document(const ReportMeta& meta, json rows) {
  json doc{{"meta", meta_json(meta)}, {"rows", std::move(rows)}};
  return doc.dump(2) + "\n";
}

std::string cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string md_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  os << "|";
  for (const auto& h : header) os << ' ' << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) {
    os << "|";
    for (const auto& c : r) os << ' ' << cell(c) << " |";
    os << "\n";
  }
  return os.str();
}

std::string md_meta(const ReportMeta& m) {
  std::ostringstream os;
  os << "n_range " << m.n_lo << ".." << m.n_hi << ", d_max " << m.d_max << ", seed " << m.seed
     << ", version " << version() << "\n";
  return os.str();
}

json solution_json(const CongruenceSolution& r) {
  return json{{"e", opt_json(r.e)},      {"d", opt_json(r.d)},
              {"g", opt_json(r.g)},      {"D", opt_json(r.D)},
              {"a", opt_json(r.a)},      {"b", opt_json(r.b)},
              {"status", std::string(status_name(r.status))},
              {"reason", r.reason},      {"anchor", r.anchor}};
}

std::vector<std::string> solution_cells(const CongruenceSolution& r) {
  return {opt_text(r.e), opt_text(r.d), opt_text(r.g), opt_text(r.D), opt_text(r.a),
          opt_text(r.b), std::string(status_name(r.status)), r.reason, r.anchor};
}

const std::vector<std::string> kSolutionHeader{"e", "d", "g", "D", "a", "b",
                                               "status", "reason", "anchor"};

json check_json(const CheckResult& c) {
  return json{{"check", c.name},
              {"n", c.n ? json(c.n) : json(nullptr)},
              {"status", c.passed ? "PASS" : "FAIL"},
              {"anchor", c.anchor},
              {"detail", c.detail}};
}

std::vector<std::string> check_cells(const CheckResult& c) {
  return {c.name, c.n ? std::to_string(c.n) : "-", c.passed ? "PASS" : "FAIL", c.anchor, c.detail};
}

const std::vector<std::string> kCheckHeader{"check", "n", "status", "anchor", "detail"};

std::string check_summary(const std::vector<CheckResult>& checks) {
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
  return std::to_string(checks.size() - static_cast<std::size_t>(failed)) + "/" +
         std::to_string(checks.size()) + " checks pass\n";
}

json twists_json(const SplitBundle& b) { return json(b.twists()); }

json stratum_json(int n, const StratumResult& s) {
  return json{{"n", n},
              {"stratum", std::string(stratum_name(s.stratum))},
              {"description", s.description},
              {"representative", s.representative.to_string()},
              {"splitting", s.splitting ? json(s.splitting->to_string()) : json(nullptr)},
              {"contradiction", s.contradiction}};
}

std::vector<std::string> stratum_cells(int n, const StratumResult& s) {
  return {std::to_string(n), std::string(stratum_name(s.stratum)), s.representative.to_string(),
          s.splitting ? s.splitting->to_string() : "contradiction"};
}

json cotangent_json(const CotangentDecomposition& c) {
  json summands = json::array();
  for (const auto& s : c.summands) summands.push_back({{"rank", s.rank}, {"degree", s.degree}});
  return json{{"n", c.n},
              {"d", c.d},
              {"summands", summands},
              {"total_rank", c.total_rank},
              {"total_c1", c.total_c1},
              {"expected_c1", c.expected_c1},
              {"normalized_rank2_degree", c.normalized_rank2_degree},
              {"ruled_invariant", c.ruled_invariant},
              {"note", c.note},
              {"consistent", c.consistent}};
}

std::optional<std::int64_t> read_opt(const json& row, const char* key) {
  if (!row.contains(key)) throw std::invalid_argument(std::string("classify json: missing ") + key);
  const json& v = row.at(key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("classify json: ") + key + " is not an integer");
  return v.get<std::int64_t>();
}

}  // namespace

std::string render_classify(const ReportMeta& meta, const std::vector<CongruenceSolution>& rows,
                            OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(solution_json(r));
    return document(meta, std::move(arr));
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) cells.push_back(solution_cells(r));
  return "# Classification\n\n" + md_meta(meta) + "\n" + md_table(kSolutionHeader, cells);
}

std::string render_verify(const ReportMeta& meta, const std::vector<CheckResult>& checks,
                          OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(check_json(c));
    return document(meta, std::move(arr));
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& c : checks) cells.push_back(check_cells(c));
  return "# Verification\n\n" + md_meta(meta) + "\n" + check_summary(checks) + "\n" +
         md_table(kCheckHeader, cells);
}

std::string render_linecase(const ReportMeta& meta, int n, const PicardClass& p,
                            const LineCaseResult& r, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    json row{{"n", n},
             {"alpha", p.alpha},
             {"beta", p.beta},
             {"gamma", p.gamma},
             {"w", {r.w.first, r.w.second}},
             {"case", std::string(line_case_name(r.kind))},
             {"a", opt_json(r.a)},
             {"b", opt_json(r.b)},
             {"hypersurface_degree", opt_json(r.hypersurface_degree)},
             {"residual_degree", opt_json(r.residual_degree)},
             {"delegated", r.delegated},
             {"detail", r.detail}};
    return document(meta, json::array({row}));
  }
  const std::vector<std::string> header{"n", "class", "W", "case", "a", "b",
                                        "hypersurface", "residual", "detail"};
  const std::string cls = "(" + std::to_string(p.alpha) + ", " + std::to_string(p.beta) + ", " +
                          std::to_string(p.gamma) + ")";
  const std::string w = "(" + std::to_string(r.w.first) + ", " + std::to_string(r.w.second) + ")";
  return "# Line case\n\n" + md_meta(meta) + "\n" +
         md_table(header, {{std::to_string(n), cls, w, std::string(line_case_name(r.kind)),
                            opt_text(r.a), opt_text(r.b), opt_text(r.hypersurface_degree),
                            opt_text(r.residual_degree), r.detail}});
}

std::string render_split(const ReportMeta& meta, const FormVector& v, const SplitResult& engine,
                         const SplitResult& oracle, OutputFormat fmt) {
  const bool agrees = engine == oracle;
  if (fmt == OutputFormat::json) {
    json row{{"input", v.to_string()},
             {"torsion", engine.torsion},
             {"bundle", engine.bundle.to_string()},
             {"twists", twists_json(engine.bundle)},
             {"rank", engine.bundle.rank()},
             {"degree", engine.bundle.degree()},
             {"oracle", oracle.to_string()},
             {"agrees", agrees}};
    return document(meta, json::array({row}));
  }
  const std::vector<std::string> header{"input", "torsion", "bundle", "rank", "degree", "oracle", "agrees"};
  return "# Splitting type\n\n" + md_meta(meta) + "\n" +
         md_table(header, {{v.to_string(), std::to_string(engine.torsion), engine.bundle.to_string(),
                            std::to_string(engine.bundle.rank()), std::to_string(engine.bundle.degree()),
                            oracle.to_string(), agrees ? "yes" : "no"}});
}

FullReport build_full_report(const VerifyOptions& opt, bool diagnostics) {
  FullReport rep;
  rep.checks = run_identity_suite(opt);
  rep.table = classification_table(opt.d_max);
  if (diagnostics) {
    auto neg = negative_divisor_scan(opt.d_max);
    rep.table.insert(rep.table.end(), neg.begin(), neg.end());
  }
  for (int n = std::max(4, opt.n_lo); n <= opt.n_hi; ++n) rep.strata.emplace_back(n, strata_enumerate(n));
  for (int n = opt.n_lo; n <= opt.n_hi; ++n) rep.cotangent.push_back(restricted_cotangent_decomposition(n, 3));
  return rep;
}

std::string render_full_report(const ReportMeta& meta, const FullReport& rep, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    json arr = json::array();
    auto tagged = [](const char* section, json row) {
      json out{{"section", section}};
      for (auto& [k, v] : row.items()) out[k] = v;
      return out;
    };
    for (const auto& c : rep.checks) arr.push_back(tagged("verify", check_json(c)));
    for (const auto& r : rep.table) arr.push_back(tagged("classify", solution_json(r)));
    for (const auto& [n, strata] : rep.strata)
      for (const auto& s : strata) arr.push_back(tagged("strata", stratum_json(n, s)));
    for (const auto& c : rep.cotangent) arr.push_back(tagged("cotangent", cotangent_json(c)));
    return document(meta, std::move(arr));
  }

  std::ostringstream os;
  os << "# Report\n\n" << md_meta(meta);

  os << "\n## Identities\n\n" << check_summary(rep.checks) << "\n";
  std::vector<std::vector<std::string>> cells;
  for (const auto& c : rep.checks) cells.push_back(check_cells(c));
  os << md_table(kCheckHeader, cells);

  os << "\n## Classification\n\n";
  cells.clear();
  for (const auto& r : rep.table) cells.push_back(solution_cells(r));
  os << md_table(kSolutionHeader, cells);

  os << "\n## Strata of O -> O(1)^2 + O(2)^{n-2}\n\n";
  cells.clear();
  for (const auto& [n, strata] : rep.strata)
    for (const auto& s : strata) cells.push_back(stratum_cells(n, s));
  os << md_table({"n", "stratum", "representative", "cokernel"}, cells);

  os << "\n## Omega(2) on a plane cubic\n\n";
  cells.clear();
  for (const auto& c : rep.cotangent) {
    std::string summands;
    for (const auto& s : c.summands) {
      if (!summands.empty()) summands += " + ";
      summands += "(" + std::to_string(s.rank) + ", " + std::to_string(s.degree) + ")";
    }
    cells.push_back({std::to_string(c.n), summands, std::to_string(c.total_rank),
                     std::to_string(c.total_c1), std::to_string(c.ruled_invariant),
                     c.consistent ? "yes" : "no"});
  }
  os << md_table({"n", "summands (rank, degree)", "rank", "c1", "ruled invariant", "consistent"}, cells);
  return os.str();
}

std::vector<CongruenceSolution> parse_classify_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw std::invalid_argument(std::string("classify json: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("meta") || !doc.contains("rows") || !doc["rows"].is_array())
    throw std::invalid_argument("classify json: expected {meta, rows}");
  std::vector<CongruenceSolution> rows;
  try {
  for (const auto& row : doc["rows"]) {
    CongruenceSolution r;
    r.e = read_opt(row, "e");
    r.d = read_opt(row, "d");
    r.g = read_opt(row, "g");
    r.D = read_opt(row, "D");
    r.a = read_opt(row, "a");
    r.b = read_opt(row, "b");
    r.status = parse_status(row.at("status").get<std::string>());
    r.reason = row.at("reason").get<std::string>();
    r.anchor = row.at("anchor").get<std::string>();
    rows.push_back(std::move(r));
  }
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("classify json: ") + ex.what());
  }
  return rows;
}

}  // namespace linecong
