#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cibench/report.hpp"

namespace cibench {

enum class Command {
  validate,
  correlate,
  fit,
  relimp,
  benchmark_fit,
  benchmark_size,
  position,
  project,
  report,
};

/// Throws Usage for an unrecognized command name.
Command parse_command(std::string_view name);
std::string_view command_name(Command command);

struct RunConfig {
  Command command = Command::validate;
  std::string input;
  std::optional<std::string> inventory;
  std::optional<std::string> output;
  Format format = Format::markdown;
  std::optional<std::string> scope;
  std::optional<std::string> basis;
  std::vector<double> values;
  std::optional<std::string> preset;
  std::optional<std::string> coeff_file;
  std::optional<std::string> coeff_out;
  std::optional<double> median_comp;
  std::optional<double> budget_fraction;
  std::optional<double> rate;
  int base_year = 2025;
  int horizon = 5;
  bool strict = false;
};

/// Builds the report for a command without writing anything.
Report build_report(const RunConfig& config, const DisplayOptions& opts);

/// Executes a command: the rendered report goes to config.output (written to
/// a temporary file and renamed into place) or to `out`. On failure a one-line
/// JSON error record goes to `err` and the mapped exit code is returned.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Replaces `path` atomically with `content`. Throws Error{Io}.
void write_atomically(const std::string& path, const std::string& content);

/// One-line JSON error record.
std::string error_record(std::string_view command, std::string_view kind, std::string_view message,
                         int exit_code);

}  // namespace cibench
