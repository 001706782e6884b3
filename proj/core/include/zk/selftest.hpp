#pragma once

// Regression suite over the published example values plus closed-form
// cross-checks at desk scale. Used by `zkinv selftest`.

#include <string>
#include <vector>

namespace zk {

struct SelfTestCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<SelfTestCase> run_selftest();

}  // namespace zk
