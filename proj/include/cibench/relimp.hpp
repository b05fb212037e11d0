#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cibench/stats.hpp"

namespace cibench {

/// lmg decomposition: each share is the predictor's incremental R^2 averaged
/// over all entry orderings. Shares are raw variance proportions and sum to
/// the full-model R^2.
struct RelativeImportance {
  std::string output_name;
  std::vector<std::string> predictor_names;
  std::vector<double> shares;
  double total_r2 = 0.0;
};

inline constexpr std::size_t kMaxLmgPredictors = 12;

/// R^2 of the intercept plus the predictors whose bits are set in `subset`.
/// The empty subset gives 0.
double subset_r2(const RegressionSpec& spec, std::uint32_t subset);

/// Throws TooManyPredictors beyond 12 predictors; fit errors propagate.
RelativeImportance lmg(const RegressionSpec& spec);

}  // namespace cibench
