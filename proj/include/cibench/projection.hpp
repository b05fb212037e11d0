#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cibench/dataset.hpp"

namespace cibench {

struct GrowthEstimate {
  double annual_rate = 0.0;
  std::size_t n_intervals = 0;
};

/// A year-stamped capacity observation.
struct CapacityPoint {
  int year = 0;
  double teraflops = 0.0;
};

/// Geometric mean of year-over-year capacity ratios pooled across series,
/// minus one. Each series must be strictly increasing in year. A gap of g
/// years contributes its log ratio spread over g intervals. Intervals with a
/// zero endpoint are skipped. Throws InsufficientRows when nothing is usable.
GrowthEstimate estimate_growth(std::span<const std::vector<CapacityPoint>> series);

/// Pools every institution in the panel.
GrowthEstimate estimate_growth(const PanelDataset& panel);

/// Convenience for a single consecutive-year series.
GrowthEstimate estimate_growth(std::span<const double> annual_teraflops);

struct ProjectionCurve {
  int base_year = 0;
  double base_tf = 0.0;
  double annual_rate = 0.0;
  std::vector<std::pair<int, double>> points;  // (year, modeled TeraFLOPS)
};

/// base_tf * (1 + rate)^(year - base_year) for year in [base_year, base_year + horizon].
/// Throws InvalidValue for negative base_tf/horizon or rate <= -1.
ProjectionCurve project_capacity(double base_tf, int base_year, double rate, int horizon);

}  // namespace cibench
