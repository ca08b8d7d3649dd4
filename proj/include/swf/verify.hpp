#pragma once

#include <string>
#include <vector>

namespace swf::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  /// `PASS <name>` or `FAIL <name>: <detail>`.
  std::string line() const;
};

/// (g, r) pairs with 2 <= g <= 5 and 1 <= |r| <= g-1, sorted by (g, r).
std::vector<std::pair<int, int>> default_sweep();

/// Invariant suite for one (g, r).
std::vector<CheckResult> verify_params(int g, int r);

/// The eleven acceptance criteria over the default sweep, in order.
std::vector<CheckResult> acceptance_criteria();
CheckResult criterion(int index);  // 1..11

}  // namespace swf::verify
