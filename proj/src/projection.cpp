#include "cibench/projection.hpp"

#include <cmath>

#include "cibench/error.hpp"

namespace cibench {

GrowthEstimate estimate_growth(std::span<const std::vector<CapacityPoint>> series) {
  double log_sum = 0.0;
  std::size_t intervals = 0;
  for (const auto& s : series) {
    for (std::size_t i = 1; i < s.size(); ++i) {
      const auto& prev = s[i - 1];
      const auto& cur = s[i];
      if (cur.year <= prev.year) {
        throw Error(ErrorKind::InvalidValue, "capacity series must be strictly increasing in year");
      }
      if (!(prev.teraflops > 0.0) || !(cur.teraflops > 0.0)) continue;
      log_sum += std::log(cur.teraflops / prev.teraflops);
      intervals += static_cast<std::size_t>(cur.year - prev.year);
    }
  }
  if (intervals == 0) {
    throw Error(ErrorKind::InsufficientRows, "no usable year-over-year capacity intervals");
  }
  return {std::exp(log_sum / static_cast<double>(intervals)) - 1.0, intervals};
}

GrowthEstimate estimate_growth(const PanelDataset& panel) {
  std::vector<std::vector<CapacityPoint>> series;
  for (const auto& institution : panel.institutions()) {
    auto& s = series.emplace_back();
    for (const auto& row : panel.rows_for(institution)) s.push_back({row.year, row.teraflops});
  }
  return estimate_growth(std::span<const std::vector<CapacityPoint>>(series));
}

GrowthEstimate estimate_growth(std::span<const double> annual_teraflops) {
  std::vector<std::vector<CapacityPoint>> series(1);
  int year = 0;
  for (double tf : annual_teraflops) series[0].push_back({year++, tf});
  return estimate_growth(std::span<const std::vector<CapacityPoint>>(series));
}

ProjectionCurve project_capacity(double base_tf, int base_year, double rate, int horizon) {
  if (!std::isfinite(base_tf) || base_tf < 0.0) throw Error(ErrorKind::InvalidValue, "base capacity must be non-negative");
  if (horizon < 0) throw Error(ErrorKind::InvalidValue, "horizon must be non-negative");
  if (!std::isfinite(rate) || rate <= -1.0) throw Error(ErrorKind::InvalidValue, "growth rate must exceed -1");
  ProjectionCurve curve{base_year, base_tf, rate, {}};
  curve.points.reserve(static_cast<std::size_t>(horizon) + 1);
  for (int i = 0; i <= horizon; ++i) {
    curve.points.emplace_back(base_year + i, base_tf * std::pow(1.0 + rate, i));
  }
  return curve;
}

}  // namespace cibench
