#pragma once

#include <string>
#include <vector>

#include "harness/core/check_kind.hpp"

namespace harness::core {

// One completed consistency-check case. `value` is the case's violation
// magnitude: an evaluation difference in q-space for chess checks (range
// [0, 2]) or a metric value in [0, 1] for forecast checks. Records carry
// input identifiers, not full inputs; a sidecar map from id to FEN/question
// text is persisted next to the record file.
struct ViolationRecord {
  CheckKind check = CheckKind::kBoardTransformations;
  std::string case_id;
  std::vector<std::string> inputs;
  double value = 0.0;
  std::string detail;

  bool operator==(const ViolationRecord&) const = default;
};

// Throws ContractError if the record violates its field invariants
// (value < 0, empty inputs, value outside the check family's range).
void validate(const ViolationRecord& record);

}  // namespace harness::core
