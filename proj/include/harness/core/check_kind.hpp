#pragma once

#include <string>
#include <string_view>

namespace harness::core {

// One consistency relation per tag: a pair of humanly verifiable predicates
// over related inputs (P) and the corresponding model outputs (Q). A tag on a
// record says which relation the recorded case exercised.
enum class CheckKind {
  kBoardTransformations,
  kPositionMirroring,
  kForcedMove,
  kRecommendedMove,
  kNegation,
  kParaphrase,
  kMonotonicity,
  kBayesRule,
  kSelfConsistency,
};

constexpr bool is_chess_check(CheckKind k) {
  return k == CheckKind::kBoardTransformations ||
         k == CheckKind::kPositionMirroring || k == CheckKind::kForcedMove ||
         k == CheckKind::kRecommendedMove;
}

constexpr bool is_forecast_check(CheckKind k) { return !is_chess_check(k); }

std::string to_string(CheckKind kind);

// Throws ParseError on unknown names.
CheckKind check_kind_from_string(std::string_view name);

}  // namespace harness::core
