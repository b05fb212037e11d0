#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cibench {

inline constexpr int kMinYear = 1990;
inline constexpr int kMaxYear = 2100;

/// One institution-year. Inputs are TeraFLOPS (FP64) and RCD salaries in
/// millions of USD; HERD is also in millions of USD. Outputs may be missing.
struct ObservationRow {
  std::string institution;
  int year = 0;
  double teraflops = 0.0;
  double salaries = 0.0;
  std::optional<double> herd;
  std::optional<double> doctorates;
  std::optional<double> publications;
  std::optional<double> hi_impact_pubs;
  /// Output columns beyond the canonical four, carried through unchanged.
  std::vector<std::pair<std::string, std::optional<double>>> extra;

  bool operator==(const ObservationRow&) const = default;
};

/// Returns a description of the first violated row invariant, if any.
std::optional<std::string> validate_row(const ObservationRow& row);

/// Immutable multi-institution panel. Rows are ordered by institution and
/// then strictly ascending year.
class PanelDataset {
 public:
  /// Throws DuplicateKey on a repeated (institution, year), EmptyDataset on
  /// no rows, SchemaViolation on a row that breaks an invariant.
  explicit PanelDataset(std::vector<ObservationRow> rows, std::string provenance = {});

  std::span<const ObservationRow> rows() const { return rows_; }
  const std::string& provenance() const { return provenance_; }

  /// Institution labels in sorted order.
  const std::vector<std::string>& institutions() const { return institutions_; }
  bool has_institution(std::string_view institution) const;

  /// Contiguous year-ascending rows for one institution; empty if unknown.
  std::span<const ObservationRow> rows_for(std::string_view institution) const;

  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<ObservationRow> rows_;
  std::string provenance_;
  std::vector<std::string> institutions_;
};

struct IngestConfig {
  double median_compensation = 90'000.0;  // USD per FTE
  bool strict = false;
};

struct IngestWarning {
  std::size_t line = 0;  // 1-based line in the source file, 0 if not applicable
  std::string message;
};

struct PanelLoad {
  PanelDataset panel;
  std::vector<IngestWarning> warnings;
};

inline constexpr std::string_view kPanelHeader =
    "institution,year,teraflops,salaries_musd,herd_musd,doctorates,publications,hi_impact_pubs";

PanelLoad parse_panel(std::string_view text, const IngestConfig& config,
                      std::string provenance = {});
PanelLoad load_panel(const std::filesystem::path& path, const IngestConfig& config);

/// Writes the panel in the canonical header (plus any extra columns).
std::string serialize_panel(const PanelDataset& panel);

struct InventoryItem {
  double device_count = 0.0;
  double gf_per_device = 0.0;
};

struct SurveyRecord {
  std::string institution;
  int year = 0;
  std::optional<double> teraflops;
  std::vector<InventoryItem> core_inventory;
  std::optional<double> salaries;  // millions USD
  std::optional<double> fte_count;
  std::optional<double> herd;
  std::optional<double> doctorates;
  std::optional<double> publications;
};

/// Fills capacity and salaries from the inventory and FTE count when the
/// explicit values are absent. Explicit values always win.
ObservationRow normalize_survey(const SurveyRecord& record, const IngestConfig& config);

inline constexpr std::string_view kSurveyHeader =
    "institution,year,teraflops,salaries_musd,fte_count,herd_musd,doctorates,publications";
inline constexpr std::string_view kInventoryHeader = "institution,device_count,gf_per_device";

struct SurveyLoad {
  std::vector<SurveyRecord> records;
  std::vector<IngestWarning> warnings;
};

SurveyLoad parse_survey(std::string_view survey_text,
                        std::optional<std::string_view> inventory_text,
                        const IngestConfig& config);
SurveyLoad load_survey(const std::filesystem::path& survey_path,
                       const std::optional<std::filesystem::path>& inventory_path,
                       const IngestConfig& config);

struct SurveyRows {
  std::vector<ObservationRow> rows;
  std::vector<IngestWarning> warnings;
};

/// Normalizes every record; under non-strict config records that cannot be
/// normalized are dropped with a warning.
SurveyRows normalize_all(const SurveyLoad& survey, const IngestConfig& config);

std::string read_file(const std::filesystem::path& path);

}  // namespace cibench
