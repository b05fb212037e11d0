#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cibench/benchmark.hpp"
#include "cibench/dataset.hpp"
#include "cibench/production_model.hpp"
#include "cibench/projection.hpp"
#include "cibench/report.hpp"

namespace cibench {

inline constexpr std::string_view kStarsNote = "***p<0.001; **p<0.01; *p<0.05";

/// Estimate with stars over "(SE)", one column per output.
Section regression_section(const ModelSuite& suite, const DisplayOptions& opts);
Section translation_section(const TranslationTable& table, const DisplayOptions& opts);
Section correlation_section(const CorrelationMatrix& matrix, const DisplayOptions& opts);
Section relimp_section(const ModelSuite& suite, const DisplayOptions& opts);
/// One output across scopes (combined plus institutions); failed scopes show "n/a".
Section relimp_by_scope_section(std::span<const ScopeOutcome> outcomes, Output output,
                                const DisplayOptions& opts);
Section dataset_section(const PanelDataset& panel);
Section warnings_section(std::span<const IngestWarning> warnings);
Section coefficients_section(const BenchmarkCoefficients& coeffs, const DisplayOptions& opts);
Section budget_section(const BudgetSummary& summary, const DisplayOptions& opts);
Section sizing_section(const BenchmarkCoefficients& coeffs, std::span<const SizingResult> rows,
                       const DisplayOptions& opts);
Section positioning_section(const PositioningReport& report, const DisplayOptions& opts);
Section growth_section(const GrowthEstimate& growth, const DisplayOptions& opts);
/// Plot-ready rows: year, modeled_tf, scenario.
Section projection_section(std::span<const std::pair<std::string, ProjectionCurve>> curves,
                           const DisplayOptions& opts);

}  // namespace cibench
