#include "harness/core/bucket.hpp"

#include <cmath>
#include <numeric>

#include "harness/core/violation.hpp"
#include "harness/util/errors.hpp"

namespace harness::core {

std::vector<double> BucketSummary::fractions() const {
  std::vector<double> out(counts.size(), 0.0);
  if (total == 0) return out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return out;
}

const std::vector<double>& default_chess_thresholds() {
  static const std::vector<double> kThresholds{0.05, 0.1, 0.25, 0.5, 0.75, 1.0};
  return kThresholds;
}

BucketSummary bucketize(const std::vector<double>& values,
                        const std::vector<double>& thresholds) {
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i - 1] < thresholds[i])) {
      throw ConfigError("bucket thresholds must be strictly ascending");
    }
  }
  BucketSummary summary;
  summary.thresholds = thresholds;
  summary.counts.assign(thresholds.size(), 0);
  summary.total = values.size();
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ContractError("bucketize requires finite nonnegative values");
    }
    sum += v;
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
      if (v > thresholds[i]) {
        ++summary.counts[i];
      } else {
        break;  // ascending thresholds: once not above, never above
      }
    }
  }
  summary.mean = values.empty() ? 0.0 : sum / static_cast<double>(values.size());
  return summary;
}

double strong_fraction(const std::vector<double>& values, double epsilon) {
  if (epsilon < 0.0 || epsilon > 1.0) {
    throw ConfigError("strong-violation epsilon must lie in [0, 1]");
  }
  if (values.empty()) return 0.0;
  std::size_t above = 0;
  for (double v : values) {
    if (v > epsilon) ++above;
  }
  return static_cast<double>(above) / static_cast<double>(values.size());
}

void validate(const ViolationRecord& record) {
  if (record.inputs.empty()) {
    throw ContractError("record " + record.case_id + " has no inputs");
  }
  if (!std::isfinite(record.value) || record.value < 0.0) {
    throw ContractError("record " + record.case_id +
                        " has a negative or non-finite value");
  }
  const double limit = is_chess_check(record.check) ? 2.0 : 1.0;
  if (record.value > limit + 1e-9) {
    throw ContractError("record " + record.case_id +
                        " value exceeds the range of its check family");
  }
}

}  // namespace harness::core
