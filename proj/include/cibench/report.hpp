#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cibench {

/// A rendered cell: display text plus the unrounded value it came from.
struct Cell {
  std::string display;
  std::optional<double> value;

  bool operator==(const Cell&) const = default;
};

struct Section {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;

  bool operator==(const Section&) const = default;
};

struct Report {
  std::string title;
  std::vector<Section> sections;

  bool operator==(const Report&) const = default;
};

enum class Format { markdown, csv, json };

/// Throws UnsupportedFormat.
Format parse_format(std::string_view name);

/// markdown: one pipe table per section, notes in italics.
/// csv: one flat table per section; with more than one section each table is
/// preceded by a "# title" line and separated by a blank line.
/// json: the full structure, unrounded values next to display strings.
std::string render_report(const Report& report, Format format);

/// Inverse of the json rendering.
Report parse_report_json(std::string_view text);

struct DisplayOptions {
  int decimals = 3;        // coefficients, R^2, correlations, ratios
  int money_decimals = 2;  // $M amounts and per-unit effects
};

/// Defaults, with CIBENCH_PRECISION (0..12) overriding `decimals`.
/// Throws Usage for an unparseable value.
DisplayOptions display_options_from_env();

/// Fixed-point text; never prints "-0".
std::string format_fixed(double value, int decimals);

Cell number_cell(double value, int decimals);
Cell text_cell(std::string text);

}  // namespace cibench
