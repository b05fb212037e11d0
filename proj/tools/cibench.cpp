// cibench: production-function fits and investment benchmarks for research
// computing centers.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cibench/cli.hpp"
#include "cibench/error.hpp"

namespace {

void add_common(CLI::App* sub, cibench::RunConfig& cfg, std::string& format) {
  sub->add_option("--output", cfg.output, "Write the report here instead of stdout");
  sub->add_option("--format", format, "markdown, csv or json")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));
}

void add_input(CLI::App* sub, cibench::RunConfig& cfg, bool required) {
  auto* opt = sub->add_option("--input", cfg.input, "Input CSV");
  if (required) opt->required();
  sub->add_flag("--strict", cfg.strict, "Abort on the first invalid row instead of dropping it");
}

void add_survey(CLI::App* sub, cibench::RunConfig& cfg) {
  sub->add_option("--inventory", cfg.inventory, "Sidecar device inventory CSV");
  sub->add_option("--median-comp", cfg.median_comp, "Median compensation in USD per FTE (default 90000)");
}

void add_coefficients(CLI::App* sub, cibench::RunConfig& cfg) {
  sub->add_option("--preset", cfg.preset, "Named coefficient preset (survey-2025)");
  sub->add_option("--coeff-file", cfg.coeff_file, "Key-value coefficient file");
  sub->add_option("--budget-fraction", cfg.budget_fraction, "Salary share of total budget (default 0.34)");
}

void add_basis(CLI::App* sub, cibench::RunConfig& cfg) {
  sub->add_option("--basis", cfg.basis, "herd, phd or pub")->check(CLI::IsMember({"herd", "phd", "pub"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Production-function modeling and investment benchmarking for research computing"};
  app.require_subcommand(1);

  cibench::RunConfig cfg;
  std::string format = "markdown";

  auto* validate = app.add_subcommand("validate", "Validate a panel CSV and summarize it");
  add_input(validate, cfg, false);
  add_common(validate, cfg, format);

  auto* correlate = app.add_subcommand("correlate", "Kendall tau-b of inputs vs outputs per institution");
  add_input(correlate, cfg, true);
  add_common(correlate, cfg, format);

  auto* fit = app.add_subcommand("fit", "Production-function regressions for a scope");
  add_input(fit, cfg, true);
  fit->add_option("--scope", cfg.scope, "combined (default), an institution label, or all");
  add_common(fit, cfg, format);

  auto* relimp = app.add_subcommand("relimp", "lmg relative importance of TF and salaries");
  add_input(relimp, cfg, true);
  relimp->add_option("--scope", cfg.scope, "combined (default), an institution label, or all");
  add_common(relimp, cfg, format);

  auto* bfit = app.add_subcommand("benchmark-fit", "Average investment-per-output ratios from a survey");
  add_input(bfit, cfg, true);
  add_survey(bfit, cfg);
  add_basis(bfit, cfg);
  bfit->add_option("--budget-fraction", cfg.budget_fraction, "Salary share of total budget (default 0.34)");
  bfit->add_option("--coeff-out", cfg.coeff_out, "Also write the fitted coefficients (requires --basis)");
  add_common(bfit, cfg, format);

  auto* bsize = app.add_subcommand("benchmark-size", "Size capacity, salaries and budget for output levels");
  add_basis(bsize, cfg);
  bsize->add_option("--value", cfg.values, "Basis level(s); defaults to the standard grid");
  add_coefficients(bsize, cfg);
  add_common(bsize, cfg, format);

  auto* position = app.add_subcommand("position", "Actual vs predicted capacity and salaries per institution");
  add_input(position, cfg, true);
  add_survey(position, cfg);
  add_basis(position, cfg);
  add_coefficients(position, cfg);
  add_common(position, cfg, format);

  auto* project = app.add_subcommand("project", "Compound-growth capacity projection");
  add_input(project, cfg, false);
  add_basis(project, cfg);
  project->add_option("--value", cfg.values, "Basis level(s) whose modeled capacity is projected")->required();
  project->add_option("--rate", cfg.rate, "Annual growth rate (estimated from --input when omitted)");
  project->add_option("--base-year", cfg.base_year, "First projected year (default 2025)");
  project->add_option("--horizon", cfg.horizon, "Years to project (default 5)")->check(CLI::NonNegativeNumber);
  add_coefficients(project, cfg);
  add_common(project, cfg, format);

  auto* report = app.add_subcommand("report", "Full analysis report over a panel");
  add_input(report, cfg, true);
  add_coefficients(report, cfg);
  add_common(report, cfg, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    std::cerr << cibench::error_record(command, "Usage", e.what(), 2) << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    cfg.command = cibench::parse_command(command);
    cfg.format = cibench::parse_format(format);
  } catch (const cibench::Error& e) {
    std::cerr << cibench::error_record(command, cibench::to_string(e.kind()), e.what(), 2) << "\n";
    return 2;
  }
  return cibench::run(cfg, std::cout, std::cerr);
}
