#pragma once

#include <cstddef>
#include <vector>

namespace harness::core {

// Threshold-bucket statistics over violation values: for each threshold t,
// how many values are strictly greater than t. Strict comparison matches the
// "> 0.05" style column labels used in reports.
struct BucketSummary {
  std::vector<double> thresholds;
  std::vector<std::size_t> counts;  // counts[i] = |{v : v > thresholds[i]}|
  std::size_t total = 0;
  double mean = 0.0;  // arithmetic mean of all values, 0 if empty

  std::vector<double> fractions() const;
};

// Default chess reporting thresholds.
const std::vector<double>& default_chess_thresholds();

// Default strong-violation cutoff for forecast metrics.
inline constexpr double kDefaultStrongEpsilon = 0.2;

// Counts values strictly above each threshold. Thresholds must be strictly
// ascending (ConfigError otherwise); values must be finite and nonnegative
// (ContractError otherwise).
BucketSummary bucketize(const std::vector<double>& values,
                        const std::vector<double>& thresholds);

// Fraction of values strictly greater than epsilon; 0 for an empty list.
// epsilon must lie in [0, 1] (ConfigError otherwise).
double strong_fraction(const std::vector<double>& values,
                       double epsilon = kDefaultStrongEpsilon);

}  // namespace harness::core
