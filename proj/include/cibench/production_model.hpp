#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cibench/dataset.hpp"
#include "cibench/relimp.hpp"
#include "cibench/stats.hpp"

namespace cibench {

enum class Output { publications, doctorates, herd, hi_impact_pubs };

/// Column order used by every suite and table.
inline constexpr std::array<Output, 4> kOutputs = {Output::publications, Output::doctorates,
                                                   Output::herd, Output::hi_impact_pubs};

std::string_view output_key(Output output);    // e.g. "herd"
std::string_view output_label(Output output);  // e.g. "HERD Expenditures"
std::optional<double> output_value(const ObservationRow& row, Output output);

enum class Input { teraflops, salaries };
std::string_view input_label(Input input);
double input_value(const ObservationRow& row, Input input);

inline constexpr std::string_view kCombinedScope = "combined";

struct YearRange {
  int first = kMinYear;
  int last = kMaxYear;
  bool contains(int year) const { return year >= first && year <= last; }
};

/// Kendall tau of one input against each output, per institution. A cell is
/// absent when the institution has fewer than three complete years or the
/// sample is entirely tied.
struct CorrelationMatrix {
  Input input = Input::teraflops;
  std::vector<std::string> institutions;
  std::map<std::pair<Output, std::string>, std::optional<double>> entries;

  std::optional<double> at(Output output, const std::string& institution) const;
};

struct CorrelationScreen {
  CorrelationMatrix teraflops;
  CorrelationMatrix salaries;
};

inline constexpr std::size_t kMinCorrelationRows = 3;

CorrelationScreen correlate_all(const PanelDataset& panel, YearRange years = {});

struct OutputModel {
  Output output;
  RegressionFit fit;
  RelativeImportance importance;
};

/// One fit and lmg decomposition per output over a scope's complete rows
/// (rows carrying all four outputs), so every fit shares n_obs.
struct ModelSuite {
  std::string scope;
  std::size_t n_obs = 0;
  std::vector<OutputModel> models;

  const OutputModel& model(Output output) const;
};

inline constexpr std::size_t kMinSuiteRows = 4;

/// Predictor names used in every production-function regression.
inline const std::vector<std::string> kPredictorNames = {"TF", "Salaries"};

/// Design for `output` on [teraflops, salaries] over the given rows.
RegressionSpec production_spec(std::span<const ObservationRow> rows, Output output);

/// Rows of `scope` ("combined" = every institution) inside `years` that
/// carry all four outputs. Throws UnknownScope.
std::vector<ObservationRow> complete_rows(const PanelDataset& panel, std::string_view scope,
                                          YearRange years = {});

/// Throws UnknownScope, InsufficientRows (< 4 complete rows) and any fit error.
ModelSuite fit_suite(const PanelDataset& panel, std::string_view scope, YearRange years = {});

/// Outcome of fitting one scope when sweeping over all scopes.
struct ScopeOutcome {
  std::string scope;
  std::optional<ModelSuite> suite;
  std::string error;  // set when suite is empty
};

/// "combined" first, then each institution in sorted order.
std::vector<ScopeOutcome> fit_all_scopes(const PanelDataset& panel, YearRange years = {});

struct TranslationEntry {
  Output output;
  double effect_per_100tf = 0.0;
  double effect_per_100k_salary = 0.0;
  double adj_r2 = 0.0;
};

struct TranslationTable {
  std::string scope;
  std::vector<TranslationEntry> entries;
};

/// Re-expresses coefficients per 100 TeraFLOPS and per $100k of salaries.
TranslationTable translate(const ModelSuite& suite);

}  // namespace cibench
