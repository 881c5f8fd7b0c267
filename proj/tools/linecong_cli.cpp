// linecong: command-line driver.
//
//   linecong verify    [--n-range 3..12] [--d-max 50] [--format json|markdown] [--seed S]
//   linecong classify  [--d-max 50] [--diagnostics]
//   linecong linecase  --n 5 --class 2,2,3
//   linecong split     "O(0) -> O(1):x, O(1):y"
//   linecong report
//
// Exit status: 0 pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include "linecong/classify.hpp"
#include "linecong/linecase.hpp"
#include "linecong/p1split.hpp"
#include "linecong/p1split_oracle.hpp"
#include "linecong/report.hpp"
#include "linecong/verify.hpp"

namespace {

using namespace linecong;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string n_range = "3..12";
  std::int64_t d_max = 50;
  std::string format = "markdown";
  std::uint64_t seed = kDefaultSeed;
  bool diagnostics = false;
  std::string out_dir;

  // linecase
  int n = 0;
  std::string class_text;
  std::optional<std::int64_t> alpha, beta, gamma;
  // split
  std::string form;
  // verify
  std::string mutate;

  int n_lo = 3;
  int n_hi = 12;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--n-range", cfg.n_range, "inclusive range lo..hi, lo >= 3")->capture_default_str();
  cmd->add_option("--d-max", cfg.d_max, "largest curve degree, >= 3")->capture_default_str();
  cmd->add_option("--format", cfg.format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "seed for randomized cross-checks")->capture_default_str();
  cmd->add_flag("--diagnostics", cfg.diagnostics, "include the negative-D scan");
  cmd->add_option("--out-dir", cfg.out_dir, "write <command>.<ext> here (env LINECONG_OUT_DIR)");
}

void finish_config(RunConfig& cfg) {
  static const std::regex range_re(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(cfg.n_range, m, range_re))
    throw UsageError("--n-range must look like 3..12, got '" + cfg.n_range + "'");
  cfg.n_lo = std::stoi(m[1].str());
  cfg.n_hi = m[2].matched ? std::stoi(m[2].str()) : cfg.n_lo;
  if (cfg.n_lo < 3 || cfg.n_lo > cfg.n_hi) throw UsageError("--n-range needs 3 <= lo <= hi");
  if (cfg.d_max < 3) throw UsageError("--d-max must be at least 3");
  if (cfg.out_dir.empty())
    if (const char* env = std::getenv("LINECONG_OUT_DIR"); env && *env) cfg.out_dir = env;
}

OutputFormat format_of(const RunConfig& cfg) {
  return cfg.format == "json" ? OutputFormat::json : OutputFormat::markdown;
}

ReportMeta meta_of(const RunConfig& cfg) { return {cfg.n_lo, cfg.n_hi, cfg.d_max, cfg.seed}; }

VerifyOptions verify_options(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.n_lo = cfg.n_lo;
  opt.n_hi = cfg.n_hi;
  opt.d_max = cfg.d_max;
  opt.seed = cfg.seed;
  if (cfg.mutate == "euler") opt.recipe.euler_offset = 1;
  else if (cfg.mutate == "tangent") opt.recipe.divide_by_tangent = false;
  else if (cfg.mutate == "pushout") opt.recipe.pushout_twist_sign = -1;
  return opt;
}

void emit(const RunConfig& cfg, const std::string& command, const std::string& text) {
  if (cfg.out_dir.empty()) {
    std::cout << text;
    return;
  }
  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);
  const auto path = dir / (command + (cfg.format == "json" ? ".json" : ".md"));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

PicardClass picard_class(const RunConfig& cfg) {
  if (!cfg.class_text.empty()) {
    static const std::regex class_re(R"(^\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(cfg.class_text, m, class_re))
      throw UsageError("--class must be alpha,beta,gamma");
    return {std::stoll(m[1].str()), std::stoll(m[2].str()), std::stoll(m[3].str())};
  }
  if (!cfg.alpha || !cfg.beta || !cfg.gamma)
    throw UsageError("linecase needs --class a,b,c or all of --alpha --beta --gamma");
  return {*cfg.alpha, *cfg.beta, *cfg.gamma};
}

int cmd_verify(const RunConfig& cfg) {
  const auto checks = run_identity_suite(verify_options(cfg));
  emit(cfg, "verify", render_verify(meta_of(cfg), checks, format_of(cfg)));
  for (const auto& c : checks)
    if (!c.passed)
      std::cerr << "FAIL " << c.name << (c.n ? " n=" + std::to_string(c.n) : "") << ": " << c.anchor
                << "\n";
  return all_passed(checks) ? kExitPass : kExitFail;
}

int cmd_classify(const RunConfig& cfg) {
  auto rows = classification_table(cfg.d_max);
  if (cfg.diagnostics) {
    auto neg = negative_divisor_scan(cfg.d_max);
    rows.insert(rows.end(), neg.begin(), neg.end());
  }
  emit(cfg, "classify", render_classify(meta_of(cfg), rows, format_of(cfg)));
  return kExitPass;
}

int cmd_linecase(const RunConfig& cfg) {
  if (cfg.n < 3) throw UsageError("--n must be at least 3");
  const PicardClass p = picard_class(cfg);
  const LineCaseResult r = classify_line_congruence(cfg.n, p);
  emit(cfg, "linecase", render_linecase(meta_of(cfg), cfg.n, p, r, format_of(cfg)));
  return kExitPass;
}

int cmd_split(const RunConfig& cfg) {
  FormVector v;
  try {
    v = FormVector::parse(cfg.form);
    v.validate();
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  if (v.is_zero()) throw UsageError("split: the zero map has no cokernel bundle");
  const SplitResult engine = splitting_type(v);
  const SplitResult oracle = oracle_splitting_type(v);
  emit(cfg, "split", render_split(meta_of(cfg), v, engine, oracle, format_of(cfg)));
  return engine == oracle ? kExitPass : kExitFail;
}

int cmd_report(const RunConfig& cfg) {
  const FullReport rep = build_full_report(verify_options(cfg), cfg.diagnostics);
  emit(cfg, "report", render_full_report(meta_of(cfg), rep, format_of(cfg)));
  return all_passed(rep.checks) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for congruences of lines with a fundamental curve"};
  app.set_version_flag("--version", std::string(linecong::version()));
  app.require_subcommand(1);

  RunConfig cfg;
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  add_common(verify, cfg);
  verify->add_option("--mutate", cfg.mutate, "corrupt one ingredient of c(N)")
      ->check(CLI::IsMember({"euler", "tangent", "pushout"}));

  auto* classify = app.add_subcommand("classify", "classification table for plane fundamental curves");
  add_common(classify, cfg);

  auto* linecase = app.add_subcommand("linecase", "congruences with a fundamental line");
  add_common(linecase, cfg);
  linecase->add_option("--n", cfg.n, "ambient dimension")->required();
  linecase->add_option("--class", cfg.class_text, "alpha,beta,gamma");
  linecase->add_option("--alpha", cfg.alpha);
  linecase->add_option("--beta", cfg.beta);
  linecase->add_option("--gamma", cfg.gamma);

  auto* split = app.add_subcommand("split", "splitting type of a cokernel on P^1");
  add_common(split, cfg);
  split->add_option("form", cfg.form, "O(m0) -> O(a1):f1, O(a2):f2, ...")->required();

  auto* report = app.add_subcommand("report", "everything in one document");
  add_common(report, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitUsage;
  }

  try {
    finish_config(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*classify) return cmd_classify(cfg);
    if (*linecase) return cmd_linecase(cfg);
    if (*split) return cmd_split(cfg);
    if (*report) return cmd_report(cfg);
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
