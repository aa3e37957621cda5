#pragma once

#include <functional>
#include <string>
#include <vector>

#include "levelstruct/congruence_groups.hpp"
#include "levelstruct/rational.hpp"

namespace levelstruct {

struct CheckResult {
  std::string id;
  std::string description;
  /// Highest level the check enumerates; it is skipped above the bound.
  int max_level = 0;
  bool skipped = false;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  EnumerationLimit limit;
  /// Replaces the Z'^2 computation inside the smoothness checks. Used to
  /// inject faults in tests.
  std::function<Rational(const SubgroupSpec&)> zprime_override;
};

/// Reference claims about the three families, checked one by one. A check
/// that throws counts as failed with the exception text as detail.
std::vector<CheckResult> verify_reference_claims(const VerifyOptions& options = {});

/// True when nothing failed and nothing was skipped.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace levelstruct
