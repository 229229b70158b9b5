#pragma once

#include <set>
#include <string>
#include <vector>

namespace becpolar {

enum class Suite { orders, reliability, identities, tables, all };

/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(const std::string& name);

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  /// Counterexample or skip reason; empty on a clean pass.
  std::string detail;
  /// Library operations the check exercised.
  std::vector<std::string> ops;
  double seconds = 0;
};

struct VerifyReport {
  int m = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::set<std::string> ops_exercised() const;
};

/// Runs every check of the suite at sizes up to m. Exhaustive checks are
/// clamped to the largest size they support (e.g. pointwise scans to 6,
/// subset enumeration to 4); published reference values are checked for
/// every size <= m they exist for.
VerifyReport run_verification(int m, Suite suite);

}  // namespace becpolar
