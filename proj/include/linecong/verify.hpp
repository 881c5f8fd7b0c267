#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linecong/normal.hpp"

namespace linecong {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct VerifyOptions {
  int n_lo = 3;
  int n_hi = 12;
  std::int64_t d_max = 50;
  std::uint64_t seed = kDefaultSeed;
  /// Non-default values corrupt the engine; used as a negative control.
  NormalRecipe recipe;
};

struct CheckResult {
  std::string name;
  /// 0 for checks that do not depend on n.
  int n = 0;
  std::string anchor;
  bool passed = false;
  std::string detail;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Every identity for every n in range, then the n-independent checks.
/// Deterministic for fixed options.  Throws std::invalid_argument on n_lo < 3,
/// n_lo > n_hi or d_max < 3.
std::vector<CheckResult> run_identity_suite(const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace linecong
