#include "harness/core/check_kind.hpp"

#include "harness/util/errors.hpp"

namespace harness::core {

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::kBoardTransformations: return "board_transformations";
    case CheckKind::kPositionMirroring: return "position_mirroring";
    case CheckKind::kForcedMove: return "forced_move";
    case CheckKind::kRecommendedMove: return "recommended_move";
    case CheckKind::kNegation: return "negation";
    case CheckKind::kParaphrase: return "paraphrase";
    case CheckKind::kMonotonicity: return "monotonicity";
    case CheckKind::kBayesRule: return "bayes_rule";
    case CheckKind::kSelfConsistency: return "self_consistency";
  }
  throw ContractError("unreachable CheckKind");
}

CheckKind check_kind_from_string(std::string_view name) {
  if (name == "board_transformations") return CheckKind::kBoardTransformations;
  if (name == "position_mirroring") return CheckKind::kPositionMirroring;
  if (name == "forced_move") return CheckKind::kForcedMove;
  if (name == "recommended_move") return CheckKind::kRecommendedMove;
  if (name == "negation") return CheckKind::kNegation;
  if (name == "paraphrase") return CheckKind::kParaphrase;
  if (name == "monotonicity") return CheckKind::kMonotonicity;
  if (name == "bayes_rule") return CheckKind::kBayesRule;
  if (name == "self_consistency") return CheckKind::kSelfConsistency;
  throw ParseError("unknown check kind: " + std::string(name));
}

}  // namespace harness::core
