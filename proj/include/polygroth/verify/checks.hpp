#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace polygroth::verify {

struct CheckInfo {
  std::string name;
  int criterion = 0;  // acceptance criterion 1..10
  std::string summary;
};

struct CheckResult {
  std::string name;
  int criterion = 0;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Every named check in execution order.
const std::vector<CheckInfo>& check_catalog();

/// `*` and `?` wildcards.
bool glob_match(std::string_view pattern, std::string_view text);

/// Runs one check; an exception inside a check is reported as a failure.
CheckResult run_check(const std::string& name);

/// Runs every check whose name matches the pattern.
std::vector<CheckResult> run_checks(std::string_view pattern = "*");

/// Short titles of the acceptance criteria, indexed 1..10.
std::string criterion_title(int criterion);

}  // namespace polygroth::verify
