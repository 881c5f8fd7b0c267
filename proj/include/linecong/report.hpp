#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linecong/classify.hpp"
#include "linecong/linecase.hpp"
#include "linecong/p1split.hpp"
#include "linecong/verify.hpp"

namespace linecong {

std::string_view version();

enum class OutputFormat { json, markdown };

struct ReportMeta {
  int n_lo = 3;
  int n_hi = 12;
  std::int64_t d_max = 50;
  std::uint64_t seed = kDefaultSeed;
};

/// All renderers end with a newline and are byte-deterministic.
std::string render_classify(const ReportMeta& meta, const std::vector<CongruenceSolution>& rows,
                            OutputFormat fmt);
std::string render_verify(const ReportMeta& meta, const std::vector<CheckResult>& checks,
                          OutputFormat fmt);
std::string render_linecase(const ReportMeta& meta, int n, const PicardClass& p,
                            const LineCaseResult& r, OutputFormat fmt);
std::string render_split(const ReportMeta& meta, const FormVector& v, const SplitResult& engine,
                         const SplitResult& oracle, OutputFormat fmt);

/// Identities, classification, strata and restricted-cotangent bookkeeping in
/// one document.
struct FullReport {
  std::vector<CheckResult> checks;
  std::vector<CongruenceSolution> table;
  std::vector<std::pair<int, std::vector<StratumResult>>> strata;
  std::vector<CotangentDecomposition> cotangent;
};
FullReport build_full_report(const VerifyOptions& opt, bool diagnostics);
std::string render_full_report(const ReportMeta& meta, const FullReport& rep, OutputFormat fmt);

/// Inverse of the JSON classify renderer.  Throws std::invalid_argument on
/// schema violations.
std::vector<CongruenceSolution> parse_classify_json(std::string_view text);

}  // namespace linecong
