#include "cibench/tables.hpp"

#include <algorithm>

#include "cibench/csv.hpp"

namespace cibench {

namespace {

std::vector<std::string> output_columns(std::string first) {
  std::vector<std::string> cols{std::move(first)};
  for (Output o : kOutputs) cols.emplace_back(output_label(o));
  return cols;
}

Cell estimate_cell(const CoefficientEstimate& c, int decimals) {
  Cell cell = number_cell(c.estimate, decimals);
  cell.display += significance_stars(c.p_value);
  return cell;
}

Cell se_cell(const CoefficientEstimate& c, int decimals) {
  Cell cell = number_cell(c.standard_error, decimals);
  cell.display = "(" + cell.display + ")";
  return cell;
}

Cell count_cell(std::size_t n) { return {std::to_string(n), static_cast<double>(n)}; }

Cell plain_cell(double v) { return {csv::format_double(v), v}; }

Cell na_cell() { return text_cell("n/a"); }

}  // namespace

Section regression_section(const ModelSuite& suite, const DisplayOptions& opts) {
  Section s;
  s.title = "Production Function Models - " + suite.scope;
  s.columns = output_columns("");
  const int d = opts.decimals;

  auto coefficient_rows = [&](const std::string& label, auto pick) {
    std::vector<Cell> est{text_cell(label)};
    std::vector<Cell> se{text_cell("")};
    for (Output o : kOutputs) {
      const CoefficientEstimate& c = pick(suite.model(o).fit);
      est.push_back(estimate_cell(c, d));
      se.push_back(se_cell(c, d));
    }
    s.rows.push_back(std::move(est));
    s.rows.push_back(std::move(se));
  };
  coefficient_rows("(Intercept)", [](const RegressionFit& f) -> const CoefficientEstimate& { return f.intercept; });
  coefficient_rows("TF", [](const RegressionFit& f) -> const CoefficientEstimate& { return f.coefficients.at(0); });
  coefficient_rows("Salaries", [](const RegressionFit& f) -> const CoefficientEstimate& { return f.coefficients.at(1); });

  std::vector<Cell> r2{text_cell("R^2")}, adj{text_cell("Adj. R^2")}, nobs{text_cell("Num. obs.")};
  for (Output o : kOutputs) {
    const auto& f = suite.model(o).fit;
    r2.push_back(number_cell(f.r_squared, d));
    adj.push_back(number_cell(f.adj_r_squared, d));
    nobs.push_back(count_cell(f.n_obs));
  }
  s.rows.push_back(std::move(r2));
  s.rows.push_back(std::move(adj));
  s.rows.push_back(std::move(nobs));
  s.notes.emplace_back(kStarsNote);
  return s;
}

Section translation_section(const TranslationTable& table, const DisplayOptions& opts) {
  Section s;
  s.title = "Production Function Effects - " + table.scope;
  s.columns = output_columns("");
  std::vector<Cell> tf{text_cell("100 TeraFLOPS")}, sal{text_cell("$100k Salaries")}, adj{text_cell("Adj. R^2")};
  for (Output o : kOutputs) {
    auto it = std::find_if(table.entries.begin(), table.entries.end(),
                           [&](const auto& e) { return e.output == o; });
    if (it == table.entries.end()) {
      tf.push_back(na_cell());
      sal.push_back(na_cell());
      adj.push_back(na_cell());
      continue;
    }
    tf.push_back(number_cell(it->effect_per_100tf, opts.money_decimals));
    sal.push_back(number_cell(it->effect_per_100k_salary, opts.money_decimals));
    adj.push_back(number_cell(it->adj_r2, opts.decimals));
  }
  s.rows = {std::move(tf), std::move(sal), std::move(adj)};
  return s;
}

Section correlation_section(const CorrelationMatrix& matrix, const DisplayOptions& opts) {
  Section s;
  s.title = "Kendall Correlation - " + std::string(input_label(matrix.input)) + " vs Outputs";
  s.columns.emplace_back("");
  s.columns.insert(s.columns.end(), matrix.institutions.begin(), matrix.institutions.end());
  for (Output o : kOutputs) {
    std::vector<Cell> row{text_cell(std::string(output_label(o)))};
    for (const auto& inst : matrix.institutions) {
      auto tau = matrix.at(o, inst);
      row.push_back(tau ? number_cell(*tau, opts.decimals) : na_cell());
    }
    s.rows.push_back(std::move(row));
  }
  s.notes.emplace_back("tau-b; n/a marks fewer than 3 complete years or an all-tied sample");
  return s;
}

Section relimp_section(const ModelSuite& suite, const DisplayOptions& opts) {
  Section s;
  s.title = "Relative Importance (lmg) - " + suite.scope;
  s.columns = output_columns("");
  std::vector<Cell> tf{text_cell("TeraFLOPS")}, sal{text_cell("RCD Salaries")}, total{text_cell("Model R^2")};
  for (Output o : kOutputs) {
    const auto& imp = suite.model(o).importance;
    tf.push_back(number_cell(imp.shares.at(0), opts.decimals));
    sal.push_back(number_cell(imp.shares.at(1), opts.decimals));
    total.push_back(number_cell(imp.total_r2, opts.decimals));
  }
  s.rows = {std::move(tf), std::move(sal), std::move(total)};
  return s;
}

Section relimp_by_scope_section(std::span<const ScopeOutcome> outcomes, Output output,
                                const DisplayOptions& opts) {
  Section s;
  s.title = "Relative Importance (lmg) - " + std::string(output_label(output));
  s.columns.emplace_back("");
  for (const auto& oc : outcomes) s.columns.push_back(oc.scope);
  std::vector<Cell> tf{text_cell("TeraFLOPS")}, sal{text_cell("RCD Salaries")};
  for (const auto& oc : outcomes) {
    if (!oc.suite) {
      tf.push_back(na_cell());
      sal.push_back(na_cell());
      continue;
    }
    const auto& imp = oc.suite->model(output).importance;
    tf.push_back(number_cell(imp.shares.at(0), opts.decimals));
    sal.push_back(number_cell(imp.shares.at(1), opts.decimals));
  }
  s.rows = {std::move(tf), std::move(sal)};
  for (const auto& oc : outcomes) {
    if (!oc.suite) s.notes.push_back(oc.scope + ": " + oc.error);
  }
  return s;
}

Section dataset_section(const PanelDataset& panel) {
  Section s;
  s.title = "Dataset";
  s.columns = {"Institution", "Rows", "First year", "Last year", "Complete rows"};
  std::size_t total_complete = 0;
  for (const auto& inst : panel.institutions()) {
    const auto rows = panel.rows_for(inst);
    const auto complete = complete_rows(panel, inst).size();
    total_complete += complete;
    s.rows.push_back({text_cell(inst), count_cell(rows.size()), count_cell(rows.front().year),
                      count_cell(rows.back().year), count_cell(complete)});
  }
  int first = panel.rows().front().year, last = first;
  for (const auto& r : panel.rows()) {
    first = std::min(first, r.year);
    last = std::max(last, r.year);
  }
  s.rows.push_back({text_cell(std::string(kCombinedScope)), count_cell(panel.size()), count_cell(first),
                    count_cell(last), count_cell(total_complete)});
  if (!panel.provenance().empty()) s.notes.push_back("source: " + panel.provenance());
  return s;
}

Section warnings_section(std::span<const IngestWarning> warnings) {
  Section s;
  s.title = "Ingestion Warnings";
  s.columns = {"Line", "Message"};
  for (const auto& w : warnings) {
    s.rows.push_back({w.line ? count_cell(w.line) : text_cell(""), text_cell(w.message)});
  }
  return s;
}

Section coefficients_section(const BenchmarkCoefficients& c, const DisplayOptions& opts) {
  Section s;
  s.title = "Benchmark Coefficients - " + std::string(basis_label(c.basis));
  s.columns = {"Quantity", "Value"};
  s.rows.push_back({text_cell("Basis"), text_cell(std::string(basis_key(c.basis)))});
  s.rows.push_back({text_cell("TeraFLOPS per unit"), number_cell(c.tf_per_unit, opts.money_decimals)});
  s.rows.push_back({text_cell("Salary USD per unit"), number_cell(c.salary_usd_per_unit, 0)});
  if (c.basis == Basis::herd) {
    s.rows.push_back({text_cell("Salaries as % of R&D"), number_cell(100.0 * c.salary_fraction_of_herd(), opts.money_decimals)});
  }
  s.rows.push_back({text_cell("Salary budget fraction"), number_cell(c.salary_budget_fraction, opts.money_decimals)});
  s.rows.push_back({text_cell("Institutions"), count_cell(c.n_institutions)});
  return s;
}

Section budget_section(const BudgetSummary& b, const DisplayOptions& opts) {
  Section s;
  s.title = "Estimated Total Budgets";
  s.columns = {"Quantity", "Value"};
  s.rows.push_back({text_cell("Mean total budget ($M)"), number_cell(b.mean_budget_musd, opts.money_decimals)});
  if (b.mean_budget_fraction_of_herd) {
    s.rows.push_back({text_cell("Mean budget as % of R&D"),
                      number_cell(100.0 * *b.mean_budget_fraction_of_herd, opts.money_decimals)});
  }
  s.rows.push_back({text_cell("Institutions"), count_cell(b.n_institutions)});
  return s;
}

Section sizing_section(const BenchmarkCoefficients& coeffs, std::span<const SizingResult> rows,
                       const DisplayOptions& opts) {
  Section s;
  s.title = "Center Investment Benchmarks - " + std::string(basis_label(coeffs.basis));
  s.columns = {std::string(basis_label(coeffs.basis)), "Modeled TF", "Modeled RCD Salaries ($M)",
               "Modeled Total Budget ($M)"};
  for (const auto& r : rows) {
    s.rows.push_back({plain_cell(r.basis_value), number_cell(r.modeled_tf, 0),
                      number_cell(r.modeled_salaries, opts.money_decimals),
                      number_cell(r.modeled_budget, opts.money_decimals)});
  }
  return s;
}

Section positioning_section(const PositioningReport& report, const DisplayOptions& opts) {
  Section s;
  s.title = "Actual vs Predicted - " + std::string(basis_label(report.basis));
  s.columns = {"Institution", std::string(basis_label(report.basis)), "Actual TF", "Predicted TF", "TF ratio",
               "Actual Salaries ($M)", "Predicted Salaries ($M)", "Salary ratio", "Flag"};
  const int m = opts.money_decimals;
  for (const auto& e : report.entries) {
    const bool have = e.flag != PositionFlag::missing_basis;
    std::string flag = e.flag == PositionFlag::ok ? "" : e.flag == PositionFlag::missing_basis ? "missing basis" : "zero prediction";
    s.rows.push_back({text_cell(e.institution), e.basis_value ? plain_cell(*e.basis_value) : na_cell(),
                      number_cell(e.actual_tf, 0), have ? number_cell(e.predicted_tf, 0) : na_cell(),
                      e.tf_ratio ? number_cell(*e.tf_ratio, opts.decimals) : na_cell(),
                      number_cell(e.actual_salaries, m), have ? number_cell(e.predicted_salaries, m) : na_cell(),
                      e.salary_ratio ? number_cell(*e.salary_ratio, opts.decimals) : na_cell(), text_cell(flag)});
  }
  return s;
}

Section growth_section(const GrowthEstimate& g, const DisplayOptions& opts) {
  Section s;
  s.title = "Capacity Growth";
  s.columns = {"Quantity", "Value"};
  s.rows.push_back({text_cell("Annual growth rate"), number_cell(g.annual_rate, opts.decimals)});
  s.rows.push_back({text_cell("Year-over-year intervals"), count_cell(g.n_intervals)});
  return s;
}

Section projection_section(std::span<const std::pair<std::string, ProjectionCurve>> curves,
                           const DisplayOptions& /*opts*/) {
  Section s;
  s.title = "Projected Capacity";
  s.columns = {"year", "modeled_tf", "scenario"};
  for (const auto& [scenario, curve] : curves) {
    for (const auto& [year, tf] : curve.points) {
      s.rows.push_back({count_cell(static_cast<std::size_t>(year)), number_cell(tf, 0),
                        text_cell(scenario)});
    }
  }
  return s;
}

}  // namespace cibench
