#include "cibench/relimp.hpp"

#include <bit>

#include "cibench/error.hpp"

namespace cibench {

double subset_r2(const RegressionSpec& spec, std::uint32_t subset) {
  const std::size_t k = spec.predictor_names.size();
  if (k < 32 && (subset >> k) != 0) {
    throw Error(ErrorKind::InvalidValue, "subset refers to a predictor that does not exist");
  }
  if (subset == 0) return 0.0;

  RegressionSpec sub;
  sub.output_name = spec.output_name;
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < k; ++j) {
    if (subset & (1u << j)) {
      cols.push_back(j);
      sub.predictor_names.push_back(spec.predictor_names[j]);
    }
  }
  sub.rows.reserve(spec.rows.size());
  for (const auto& row : spec.rows) {
    DesignRow r;
    r.response = row.response;
    r.predictors.reserve(cols.size());
    for (auto j : cols) r.predictors.push_back(row.predictors.at(j));
    sub.rows.push_back(std::move(r));
  }
  return fit_ols(sub).r_squared;
}

RelativeImportance lmg(const RegressionSpec& spec) {
  const std::size_t k = spec.predictor_names.size();
  if (k > kMaxLmgPredictors) {
    throw Error(ErrorKind::TooManyPredictors,
                "lmg supports at most 12 predictors, got " + std::to_string(k));
  }
  const std::uint32_t full = (1u << k) - 1;

  std::vector<double> r2(std::size_t{1} << k, 0.0);
  for (std::uint32_t s = 1; s <= full; ++s) r2[s] = subset_r2(spec, s);

  // Ordering weight of a subset of size s not containing j: s! (k - s - 1)! / k!.
  std::vector<double> factorial(k + 1, 1.0);
  for (std::size_t i = 1; i <= k; ++i) factorial[i] = factorial[i - 1] * static_cast<double>(i);
  std::vector<double> weight(k, 0.0);
  for (std::size_t s = 0; s < k; ++s) weight[s] = factorial[s] * factorial[k - s - 1] / factorial[k];

  RelativeImportance out;
  out.output_name = spec.output_name;
  out.predictor_names = spec.predictor_names;
  out.shares.assign(k, 0.0);
  out.total_r2 = k == 0 ? 0.0 : r2[full];
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint32_t bit = 1u << j;
    double share = 0.0;
    for (std::uint32_t s = 0; s <= full; ++s) {
      if (s & bit) continue;
      share += weight[static_cast<std::size_t>(std::popcount(s))] * (r2[s | bit] - r2[s]);
    }
    out.shares[j] = share;
  }
  return out;
}

}  // namespace cibench
