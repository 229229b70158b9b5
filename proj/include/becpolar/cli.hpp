#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "becpolar/construction.hpp"

namespace becpolar {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// One row of a `rank` report.
struct ReportRecord {
  int m = 0;
  std::size_t rank = 0;
  std::uint32_t u = 0;
  std::string monomial;
  int degree = 0;
  /// Criterion score as "num/den" and with 6 decimals.
  std::string score;
  std::string score_decimal;
  std::string avr;
  std::string avr_decimal;
  /// Estimate of the p where Z(W^u)(p) = 1/2, 6 decimals.
  std::string threshold;
};

/// Records in ranking order, truncated to the first k (all when k == 0).
std::vector<ReportRecord> report_records(const RankedChannels& ranked, const ChannelTable& table, std::size_t k);

/// Parses "avr", "p=<rational>" or "beta=<decimal>". Throws
/// std::invalid_argument on anything else.
Criterion parse_criterion(const std::string& text);

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace becpolar
