#include "cibench/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "json.hpp"

#include "cibench/benchmark.hpp"
#include "cibench/dataset.hpp"
#include "cibench/error.hpp"
#include "cibench/production_model.hpp"
#include "cibench/projection.hpp"
#include "cibench/tables.hpp"

namespace cibench {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kDefaultPreset = "survey-2025";

struct CommandName {
  Command command;
  std::string_view name;
};

constexpr CommandName kCommands[] = {
    {Command::validate, "validate"},         {Command::correlate, "correlate"},
    {Command::fit, "fit"},                   {Command::relimp, "relimp"},
    {Command::benchmark_fit, "benchmark-fit"}, {Command::benchmark_size, "benchmark-size"},
    {Command::position, "position"},         {Command::project, "project"},
    {Command::report, "report"},
};

IngestConfig ingest_config(const RunConfig& config) {
  IngestConfig ic;
  ic.strict = config.strict;
  if (config.median_comp) {
    if (!(*config.median_comp > 0.0)) throw Error(ErrorKind::Usage, "--median-comp must be positive");
    ic.median_compensation = *config.median_comp;
  }
  return ic;
}

void require_input(const RunConfig& config) {
  if (config.input.empty()) {
    throw Error(ErrorKind::Usage, std::string(command_name(config.command)) + " requires --input");
  }
}

PanelLoad load_panel_input(const RunConfig& config) {
  require_input(config);
  return load_panel(config.input, ingest_config(config));
}

SurveyRows load_survey_input(const RunConfig& config) {
  require_input(config);
  const auto ic = ingest_config(config);
  std::optional<fs::path> inventory;
  if (config.inventory) inventory = *config.inventory;
  return normalize_all(load_survey(config.input, inventory, ic), ic);
}

std::vector<Basis> requested_bases(const RunConfig& config) {
  if (config.basis) return {parse_basis(*config.basis)};
  return {Basis::herd, Basis::phd, Basis::pub};
}

void apply_budget_override(const RunConfig& config, BenchmarkCoefficients& c) {
  if (config.budget_fraction) {
    c.salary_budget_fraction = *config.budget_fraction;
    validate(c);
  }
}

// Coefficients from --coeff-file or a named preset; nullopt if neither was given
// and `fallback_to_default` is false.
std::optional<BenchmarkCoefficients> configured_coefficients(const RunConfig& config, std::optional<Basis> basis,
                                                             bool fallback_to_default) {
  if (config.coeff_file && config.preset) {
    throw Error(ErrorKind::Usage, "--coeff-file and --preset are mutually exclusive");
  }
  std::optional<BenchmarkCoefficients> c;
  if (config.coeff_file) {
    c = load_coefficients(*config.coeff_file);
    if (basis && c->basis != *basis) {
      throw Error(ErrorKind::BasisMismatch, "coefficient file basis '" + std::string(basis_key(c->basis)) +
                                                "' differs from --basis '" + std::string(basis_key(*basis)) + "'");
    }
  } else if (config.preset || fallback_to_default) {
    const std::string name = config.preset.value_or(std::string(kDefaultPreset));
    if (!basis) throw Error(ErrorKind::Usage, "--basis is required with a preset");
    c = preset(name, *basis);
    if (!c) throw Error(ErrorKind::Usage, "unknown preset '" + name + "'");
  }
  if (c) apply_budget_override(config, *c);
  return c;
}

Report validate_report(const RunConfig& config) {
  auto load = load_panel_input(config);
  Report r{"Panel Validation", {}};
  r.sections.push_back(dataset_section(load.panel));
  r.sections.push_back(warnings_section(load.warnings));
  return r;
}

Report correlate_report(const RunConfig& config, const DisplayOptions& opts) {
  auto load = load_panel_input(config);
  auto screen = correlate_all(load.panel);
  return {"Correlation Analysis",
          {correlation_section(screen.teraflops, opts), correlation_section(screen.salaries, opts)}};
}

Report fit_report(const RunConfig& config, const DisplayOptions& opts) {
  auto load = load_panel_input(config);
  const std::string scope = config.scope.value_or(std::string(kCombinedScope));
  Report r{"Production Function Models", {}};
  if (scope == "all") {
    for (const auto& oc : fit_all_scopes(load.panel)) {
      if (oc.suite) {
        r.sections.push_back(regression_section(*oc.suite, opts));
        r.sections.push_back(translation_section(translate(*oc.suite), opts));
      } else {
        r.sections.push_back(Section{"Production Function Models - " + oc.scope, {}, {}, {oc.error}});
      }
    }
    return r;
  }
  const auto suite = fit_suite(load.panel, scope);
  r.sections.push_back(regression_section(suite, opts));
  r.sections.push_back(translation_section(translate(suite), opts));
  return r;
}

Report relimp_report(const RunConfig& config, const DisplayOptions& opts) {
  auto load = load_panel_input(config);
  const std::string scope = config.scope.value_or(std::string(kCombinedScope));
  Report r{"Relative Importance", {}};
  if (scope == "all") {
    const auto outcomes = fit_all_scopes(load.panel);
    for (Output o : kOutputs) r.sections.push_back(relimp_by_scope_section(outcomes, o, opts));
    return r;
  }
  r.sections.push_back(relimp_section(fit_suite(load.panel, scope), opts));
  return r;
}

Report benchmark_fit_report(const RunConfig& config, const DisplayOptions& opts) {
  const auto survey = load_survey_input(config);
  if (config.coeff_out && !config.basis) {
    throw Error(ErrorKind::Usage, "--coeff-out requires --basis");
  }
  const double fraction = config.budget_fraction.value_or(kDefaultSalaryBudgetFraction);
  Report r{"Benchmark Coefficients", {}};
  for (Basis b : requested_bases(config)) {
    const auto c = estimate_coefficients(survey.rows, b, fraction);
    r.sections.push_back(coefficients_section(c, opts));
    if (config.coeff_out) write_atomically(*config.coeff_out, serialize_coefficients(c));
  }
  r.sections.push_back(budget_section(summarize_budgets(survey.rows, fraction), opts));
  if (!survey.warnings.empty()) r.sections.push_back(warnings_section(survey.warnings));
  return r;
}

Report benchmark_size_report(const RunConfig& config, const DisplayOptions& opts) {
  std::optional<Basis> basis;
  if (config.basis) basis = parse_basis(*config.basis);
  auto c = configured_coefficients(config, basis, true);
  std::vector<double> values = config.values.empty() ? reference_grid(c->basis) : config.values;
  std::vector<SizingResult> rows;
  for (double v : values) rows.push_back(size_investment(*c, v));
  return {"Center Investment Benchmarks", {sizing_section(*c, rows, opts)}};
}

Report position_report(const RunConfig& config, const DisplayOptions& opts) {
  const auto survey = load_survey_input(config);
  const Basis basis = config.basis ? parse_basis(*config.basis) : Basis::herd;
  auto c = configured_coefficients(config, basis, false);
  if (!c) {
    c = estimate_coefficients(survey.rows, basis, config.budget_fraction.value_or(kDefaultSalaryBudgetFraction));
  }
  Report r{"Institutional Positioning", {}};
  r.sections.push_back(coefficients_section(*c, opts));
  r.sections.push_back(positioning_section(position_institutions(survey.rows, *c), opts));
  return r;
}

Report project_report(const RunConfig& config, const DisplayOptions& opts) {
  if (config.values.empty()) {
    throw Error(ErrorKind::Usage, "project requires at least one --value (basis level to size)");
  }
  double rate = 0.0;
  if (config.rate) {
    rate = *config.rate;
  } else if (!config.input.empty()) {
    rate = estimate_growth(load_panel_input(config).panel).annual_rate;
  } else {
    throw Error(ErrorKind::Usage, "project requires --rate or --input to estimate growth");
  }
  std::optional<Basis> basis;
  if (config.basis) basis = parse_basis(*config.basis);
  if (!basis && !config.coeff_file) basis = Basis::herd;
  const auto c = configured_coefficients(config, basis, true);

  std::vector<std::pair<std::string, ProjectionCurve>> curves;
  for (double v : config.values) {
    const auto base = size_investment(*c, v);
    curves.emplace_back(std::string(basis_key(c->basis)) + "=" + format_fixed(v, 0),
                        project_capacity(base.modeled_tf, config.base_year, rate, config.horizon));
  }
  return {"Capacity Projection", {projection_section(curves, opts)}};
}

Report full_report(const RunConfig& config, const DisplayOptions& opts) {
  auto load = load_panel_input(config);
  const auto& panel = load.panel;
  Report r{"Cyberinfrastructure Production Function Report", {}};
  r.sections.push_back(dataset_section(panel));
  if (!load.warnings.empty()) r.sections.push_back(warnings_section(load.warnings));

  const auto screen = correlate_all(panel);
  r.sections.push_back(correlation_section(screen.teraflops, opts));
  r.sections.push_back(correlation_section(screen.salaries, opts));

  const auto outcomes = fit_all_scopes(panel);
  for (const auto& oc : outcomes) {
    if (oc.suite) {
      r.sections.push_back(regression_section(*oc.suite, opts));
      r.sections.push_back(translation_section(translate(*oc.suite), opts));
    } else {
      r.sections.push_back(Section{"Production Function Models - " + oc.scope, {}, {}, {oc.error}});
    }
  }
  for (Output o : kOutputs) r.sections.push_back(relimp_by_scope_section(outcomes, o, opts));

  try {
    r.sections.push_back(growth_section(estimate_growth(panel), opts));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InsufficientRows) throw;
    r.sections.push_back(Section{"Capacity Growth", {}, {}, {e.what()}});
  }

  std::vector<BenchmarkCoefficients> sets;
  if (config.coeff_file) {
    sets.push_back(*configured_coefficients(config, std::nullopt, false));
  } else {
    for (Basis b : {Basis::herd, Basis::phd, Basis::pub}) sets.push_back(*configured_coefficients(config, b, true));
  }
  for (const auto& c : sets) {
    std::vector<SizingResult> rows;
    for (double v : reference_grid(c.basis)) rows.push_back(size_investment(c, v));
    r.sections.push_back(sizing_section(c, rows, opts));
  }
  return r;
}

}  // namespace

Command parse_command(std::string_view name) {
  for (const auto& c : kCommands) {
    if (c.name == name) return c.command;
  }
  throw Error(ErrorKind::Usage, "unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command command) {
  for (const auto& c : kCommands) {
    if (c.command == command) return c.name;
  }
  return "";
}

Report build_report(const RunConfig& config, const DisplayOptions& opts) {
  switch (config.command) {
    case Command::validate: return validate_report(config);
    case Command::correlate: return correlate_report(config, opts);
    case Command::fit: return fit_report(config, opts);
    case Command::relimp: return relimp_report(config, opts);
    case Command::benchmark_fit: return benchmark_fit_report(config, opts);
    case Command::benchmark_size: return benchmark_size_report(config, opts);
    case Command::position: return position_report(config, opts);
    case Command::project: return project_report(config, opts);
    case Command::report: return full_report(config, opts);
  }
  throw Error(ErrorKind::Usage, "unknown command");
}

void write_atomically(const std::string& path, const std::string& content) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::Io, "cannot write '" + tmp.string() + "'");
    f << content;
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorKind::Io, "error writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorKind::Io, "cannot move output into place at '" + path + "'");
  }
}

std::string error_record(std::string_view command, std::string_view kind, std::string_view message,
                         int exit_code) {
  nlohmann::ordered_json j{{"error", std::string(kind)},
                           {"command", std::string(command)},
                           {"message", std::string(message)},
                           {"exit_code", exit_code}};
  return j.dump();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto command = command_name(config.command);
  try {
    const auto opts = display_options_from_env();
    const auto text = render_report(build_report(config, opts), config.format);
    if (config.output) {
      write_atomically(*config.output, text);
    } else {
      out << text;
      out.flush();
    }
    return 0;
  } catch (const Error& e) {
    const int code = exit_code(e.kind());
    err << error_record(command, to_string(e.kind()), e.what(), code) << "\n";
    return code;
  } catch (const std::filesystem::filesystem_error& e) {
    err << error_record(command, "Io", e.what(), 4) << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << error_record(command, "Internal", e.what(), 2) << "\n";
    return 2;
  }
}

}  // namespace cibench
