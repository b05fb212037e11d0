#include "cibench/production_model.hpp"

#include <algorithm>

#include "cibench/error.hpp"

namespace cibench {

std::string_view output_key(Output output) {
  switch (output) {
    case Output::publications: return "publications";
    case Output::doctorates: return "doctorates";
    case Output::herd: return "herd";
    case Output::hi_impact_pubs: return "hi_impact_pubs";
  }
  return "";
}

std::string_view output_label(Output output) {
  switch (output) {
    case Output::publications: return "Publications";
    case Output::doctorates: return "Earned Doctorates";
    case Output::herd: return "HERD Expenditures";
    case Output::hi_impact_pubs: return "High Impact Publications";
  }
  return "";
}

std::optional<double> output_value(const ObservationRow& row, Output output) {
  switch (output) {
    case Output::publications: return row.publications;
    case Output::doctorates: return row.doctorates;
    case Output::herd: return row.herd;
    case Output::hi_impact_pubs: return row.hi_impact_pubs;
  }
  return std::nullopt;
}

std::string_view input_label(Input input) {
  return input == Input::teraflops ? "TeraFLOPS" : "Salaries";
}

double input_value(const ObservationRow& row, Input input) {
  return input == Input::teraflops ? row.teraflops : row.salaries;
}

std::optional<double> CorrelationMatrix::at(Output output, const std::string& institution) const {
  auto it = entries.find({output, institution});
  return it == entries.end() ? std::nullopt : it->second;
}

namespace {

CorrelationMatrix correlate_input(const PanelDataset& panel, Input input, YearRange years) {
  CorrelationMatrix m;
  m.input = input;
  m.institutions = panel.institutions();
  for (const auto& institution : m.institutions) {
    for (Output output : kOutputs) {
      std::vector<double> xs, ys;
      for (const auto& row : panel.rows_for(institution)) {
        auto value = output_value(row, output);
        if (!years.contains(row.year) || !value) continue;
        xs.push_back(input_value(row, input));
        ys.push_back(*value);
      }
      std::optional<double> tau;
      if (xs.size() >= kMinCorrelationRows) {
        try {
          tau = kendall_tau(xs, ys);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::DegenerateSample) throw;
        }
      }
      m.entries[{output, institution}] = tau;
    }
  }
  return m;
}

}  // namespace

CorrelationScreen correlate_all(const PanelDataset& panel, YearRange years) {
  return {correlate_input(panel, Input::teraflops, years),
          correlate_input(panel, Input::salaries, years)};
}

const OutputModel& ModelSuite::model(Output output) const {
  auto it = std::find_if(models.begin(), models.end(), [&](const auto& m) { return m.output == output; });
  if (it == models.end()) throw Error(ErrorKind::InvalidValue, "suite has no model for output");
  return *it;
}

RegressionSpec production_spec(std::span<const ObservationRow> rows, Output output) {
  RegressionSpec spec;
  spec.output_name = std::string(output_key(output));
  spec.predictor_names = kPredictorNames;
  for (const auto& row : rows) {
    auto value = output_value(row, output);
    if (!value) continue;
    spec.rows.push_back({{row.teraflops, row.salaries}, *value});
  }
  return spec;
}

std::vector<ObservationRow> complete_rows(const PanelDataset& panel, std::string_view scope,
                                          YearRange years) {
  std::span<const ObservationRow> source;
  if (scope == kCombinedScope) {
    source = panel.rows();
  } else if (panel.has_institution(scope)) {
    source = panel.rows_for(scope);
  } else {
    throw Error(ErrorKind::UnknownScope, "unknown scope '" + std::string(scope) + "'");
  }
  std::vector<ObservationRow> out;
  for (const auto& row : source) {
    if (!years.contains(row.year)) continue;
    bool complete = std::all_of(kOutputs.begin(), kOutputs.end(),
                                [&](Output o) { return output_value(row, o).has_value(); });
    if (complete) out.push_back(row);
  }
  return out;
}

ModelSuite fit_suite(const PanelDataset& panel, std::string_view scope, YearRange years) {
  const auto rows = complete_rows(panel, scope, years);
  if (rows.size() < kMinSuiteRows) {
    throw Error(ErrorKind::InsufficientRows, "scope '" + std::string(scope) + "' has " +
                                                 std::to_string(rows.size()) +
                                                 " complete rows (need at least 4)");
  }
  ModelSuite suite;
  suite.scope = std::string(scope);
  suite.n_obs = rows.size();
  for (Output output : kOutputs) {
    const auto spec = production_spec(rows, output);
    try {
      suite.models.push_back({output, fit_ols(spec), lmg(spec)});
    } catch (const Error& e) {
      throw Error(e.kind(), "scope '" + suite.scope + "': " + e.what());
    }
  }
  return suite;
}

std::vector<ScopeOutcome> fit_all_scopes(const PanelDataset& panel, YearRange years) {
  std::vector<std::string> scopes{std::string(kCombinedScope)};
  scopes.insert(scopes.end(), panel.institutions().begin(), panel.institutions().end());
  std::vector<ScopeOutcome> out;
  for (const auto& scope : scopes) {
    ScopeOutcome outcome{scope, std::nullopt, {}};
    try {
      outcome.suite = fit_suite(panel, scope, years);
    } catch (const Error& e) {
      outcome.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    out.push_back(std::move(outcome));
  }
  return out;
}

TranslationTable translate(const ModelSuite& suite) {
  TranslationTable table;
  table.scope = suite.scope;
  for (const auto& m : suite.models) {
    TranslationEntry e;
    e.output = m.output;
    // Salaries are modeled in $M, so $100k is a tenth of a unit.
    e.effect_per_100tf = 100.0 * m.fit.coefficients.at(0).estimate;
    e.effect_per_100k_salary = m.fit.coefficients.at(1).estimate / 10.0;
    e.adj_r2 = m.fit.adj_r_squared;
    table.entries.push_back(e);
  }
  return table;
}

}  // namespace cibench
