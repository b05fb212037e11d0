#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cibench/dataset.hpp"

namespace cibench {

/// Institutional output the benchmark is expressed against.
enum class Basis { herd, phd, pub };

Basis parse_basis(std::string_view text);  // "herd" | "phd" | "pub"
std::string_view basis_key(Basis basis);
std::string_view basis_label(Basis basis);
std::optional<double> basis_value(const ObservationRow& row, Basis basis);

inline constexpr double kDefaultSalaryBudgetFraction = 0.34;

/// Averaged investment-per-output ratios. Salary cost is held in USD per
/// basis unit for every basis; the herd basis unit is $1M of expenditures,
/// so 2944 USD per unit is 0.2944% of HERD.
struct BenchmarkCoefficients {
  Basis basis = Basis::herd;
  double tf_per_unit = 0.0;
  double salary_usd_per_unit = 0.0;
  double salary_budget_fraction = kDefaultSalaryBudgetFraction;
  std::size_t n_institutions = 0;

  /// Salary spend as a fraction of R&D expenditures (herd basis only).
  double salary_fraction_of_herd() const { return salary_usd_per_unit / 1e6; }
};

/// Throws InvalidValue when a field breaks the positivity/fraction invariants.
void validate(const BenchmarkCoefficients& coeffs);

/// Unweighted mean over rows of teraflops/basis and salaries/basis.
/// Throws InsufficientRows (< 2 rows), InsufficientData (basis missing) and
/// ZeroBasis (basis <= 0).
BenchmarkCoefficients estimate_coefficients(std::span<const ObservationRow> survey, Basis basis,
                                            double salary_budget_fraction = kDefaultSalaryBudgetFraction);

struct SizingResult {
  double basis_value = 0.0;
  double modeled_tf = 0.0;
  double modeled_salaries = 0.0;  // millions USD
  double modeled_budget = 0.0;    // millions USD
};

/// Throws InvalidValue for a negative or non-finite basis value.
SizingResult size_investment(const BenchmarkCoefficients& coeffs, double basis_value);

enum class PositionFlag { ok, missing_basis, zero_prediction };

struct PositionEntry {
  std::string institution;
  std::optional<double> basis_value;
  double actual_tf = 0.0;
  double predicted_tf = 0.0;
  std::optional<double> tf_ratio;  // actual / predicted
  double actual_salaries = 0.0;
  double predicted_salaries = 0.0;
  std::optional<double> salary_ratio;
  PositionFlag flag = PositionFlag::ok;
};

struct PositioningReport {
  Basis basis = Basis::herd;
  std::vector<PositionEntry> entries;
};

/// Actual versus modeled capacity and salaries for each survey row. Throws
/// BasisMismatch when no row carries the coefficients' basis.
PositioningReport position_institutions(std::span<const ObservationRow> survey,
                                        const BenchmarkCoefficients& coeffs);

/// Average total budget implied by the salary budget fraction.
struct BudgetSummary {
  double mean_budget_musd = 0.0;
  std::optional<double> mean_budget_fraction_of_herd;
  std::size_t n_institutions = 0;
};

BudgetSummary summarize_budgets(std::span<const ObservationRow> survey,
                                double salary_budget_fraction = kDefaultSalaryBudgetFraction);

/// Named coefficient sets from the 2025 investment survey.
/// "survey-2025": herd 11.47 TF and $2,944 per $1M; phd 19.65 TF and $4,696
/// per doctorate; pub 1.34 TF and $341 per publication; 34% salary share.
std::optional<BenchmarkCoefficients> preset(std::string_view name, Basis basis);
std::vector<std::string> preset_names();

/// Standard sizing grid for each basis.
std::vector<double> reference_grid(Basis basis);

/// Key-value text: basis, tf_per_unit, salary_per_unit (USD per basis unit),
/// salary_budget_fraction. '#' starts a comment line.
std::string serialize_coefficients(const BenchmarkCoefficients& coeffs);
BenchmarkCoefficients parse_coefficients(std::string_view text);
BenchmarkCoefficients load_coefficients(const std::filesystem::path& path);

}  // namespace cibench
