#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rydgauge {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // worst metric seen
  double tolerance = 0.0;
  std::string detail;
};

// Oracle and invariant suite behind `validate`. Deterministic: fixed seeds,
// fixed grids, sequential.
std::vector<CheckResult> run_validation(bool quick, const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace rydgauge
