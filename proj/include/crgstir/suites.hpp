#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crgstir/stirling.hpp"

namespace crgstir {

struct IntRange {
  int lo = 0;
  int hi = 0;
  std::string to_string() const;
};

/// "3" or "1..4". Throws std::invalid_argument.
IntRange parse_range(std::string_view text);

struct SuiteOptions {
  std::optional<IntRange> m;
  std::optional<IntRange> n;
};

/// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
std::vector<VerificationReport> run_suite(std::string_view name, const SuiteOptions& options = {});

struct ReportTally {
  int verified = 0;
  int failed = 0;
  int discrepancies = 0;
};
ReportTally tally(const std::vector<VerificationReport>& reports);

}  // namespace crgstir
