#include "cibench/benchmark.hpp"

#include <cmath>
#include <map>

#include "cibench/csv.hpp"
#include "cibench/error.hpp"

namespace cibench {

Basis parse_basis(std::string_view text) {
  if (text == "herd") return Basis::herd;
  if (text == "phd") return Basis::phd;
  if (text == "pub") return Basis::pub;
  throw Error(ErrorKind::Usage, "unknown basis '" + std::string(text) + "' (expected herd, phd or pub)");
}

std::string_view basis_key(Basis basis) {
  switch (basis) {
    case Basis::herd: return "herd";
    case Basis::phd: return "phd";
    case Basis::pub: return "pub";
  }
  return "";
}

std::string_view basis_label(Basis basis) {
  switch (basis) {
    case Basis::herd: return "R&D Expenditures ($M)";
    case Basis::phd: return "Earned Doctorates";
    case Basis::pub: return "Publications";
  }
  return "";
}

std::optional<double> basis_value(const ObservationRow& row, Basis basis) {
  switch (basis) {
    case Basis::herd: return row.herd;
    case Basis::phd: return row.doctorates;
    case Basis::pub: return row.publications;
  }
  return std::nullopt;
}

void validate(const BenchmarkCoefficients& c) {
  if (!(c.tf_per_unit > 0.0) || !std::isfinite(c.tf_per_unit)) {
    throw Error(ErrorKind::InvalidValue, "tf_per_unit must be positive");
  }
  if (!(c.salary_usd_per_unit > 0.0) || !std::isfinite(c.salary_usd_per_unit)) {
    throw Error(ErrorKind::InvalidValue, "salary_per_unit must be positive");
  }
  if (!(c.salary_budget_fraction > 0.0 && c.salary_budget_fraction <= 1.0)) {
    throw Error(ErrorKind::InvalidValue, "salary_budget_fraction must be in (0, 1]");
  }
}

BenchmarkCoefficients estimate_coefficients(std::span<const ObservationRow> survey, Basis basis,
                                            double salary_budget_fraction) {
  if (survey.size() < 2) {
    throw Error(ErrorKind::InsufficientRows, "benchmark estimation needs at least 2 institutions");
  }
  double tf_sum = 0.0;
  double salary_sum = 0.0;
  for (const auto& row : survey) {
    auto value = basis_value(row, basis);
    if (!value) {
      throw Error(ErrorKind::InsufficientData,
                  row.institution + ": no " + std::string(basis_key(basis)) + " value");
    }
    if (!(*value > 0.0)) {
      throw Error(ErrorKind::ZeroBasis,
                  row.institution + ": " + std::string(basis_key(basis)) + " must be positive");
    }
    tf_sum += row.teraflops / *value;
    salary_sum += row.salaries * 1e6 / *value;
  }
  const double n = static_cast<double>(survey.size());
  BenchmarkCoefficients c;
  c.basis = basis;
  c.tf_per_unit = tf_sum / n;
  c.salary_usd_per_unit = salary_sum / n;
  c.salary_budget_fraction = salary_budget_fraction;
  c.n_institutions = survey.size();
  validate(c);
  return c;
}

SizingResult size_investment(const BenchmarkCoefficients& coeffs, double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw Error(ErrorKind::InvalidValue, "basis value must be a non-negative number");
  }
  SizingResult r;
  r.basis_value = value;
  r.modeled_tf = coeffs.tf_per_unit * value;
  r.modeled_salaries = coeffs.salary_usd_per_unit * value / 1e6;
  r.modeled_budget = r.modeled_salaries / coeffs.salary_budget_fraction;
  return r;
}

PositioningReport position_institutions(std::span<const ObservationRow> survey,
                                        const BenchmarkCoefficients& coeffs) {
  PositioningReport report;
  report.basis = coeffs.basis;
  bool any_basis = false;
  for (const auto& row : survey) {
    PositionEntry e;
    e.institution = row.institution;
    e.actual_tf = row.teraflops;
    e.actual_salaries = row.salaries;
    e.basis_value = basis_value(row, coeffs.basis);
    if (!e.basis_value || *e.basis_value < 0.0) {
      e.basis_value.reset();
      e.flag = PositionFlag::missing_basis;
    } else {
      any_basis = true;
      const auto sized = size_investment(coeffs, *e.basis_value);
      e.predicted_tf = sized.modeled_tf;
      e.predicted_salaries = sized.modeled_salaries;
      if (e.predicted_tf > 0.0 && e.predicted_salaries > 0.0) {
        e.tf_ratio = e.actual_tf / e.predicted_tf;
        e.salary_ratio = e.actual_salaries / e.predicted_salaries;
      } else {
        e.flag = PositionFlag::zero_prediction;
      }
    }
    report.entries.push_back(std::move(e));
  }
  if (!any_basis) {
    throw Error(ErrorKind::BasisMismatch,
                "no survey row carries a " + std::string(basis_key(coeffs.basis)) + " value");
  }
  return report;
}

BudgetSummary summarize_budgets(std::span<const ObservationRow> survey, double salary_budget_fraction) {
  if (survey.empty()) throw Error(ErrorKind::EmptyDataset, "no survey rows");
  if (!(salary_budget_fraction > 0.0 && salary_budget_fraction <= 1.0)) {
    throw Error(ErrorKind::InvalidValue, "salary_budget_fraction must be in (0, 1]");
  }
  BudgetSummary s;
  s.n_institutions = survey.size();
  double budget_sum = 0.0;
  double fraction_sum = 0.0;
  std::size_t fraction_count = 0;
  for (const auto& row : survey) {
    const double budget = row.salaries / salary_budget_fraction;
    budget_sum += budget;
    if (row.herd && *row.herd > 0.0) {
      fraction_sum += budget / *row.herd;
      ++fraction_count;
    }
  }
  s.mean_budget_musd = budget_sum / static_cast<double>(survey.size());
  if (fraction_count > 0) s.mean_budget_fraction_of_herd = fraction_sum / static_cast<double>(fraction_count);
  return s;
}

std::optional<BenchmarkCoefficients> preset(std::string_view name, Basis basis) {
  if (name != "survey-2025") return std::nullopt;
  BenchmarkCoefficients c;
  c.basis = basis;
  c.n_institutions = 28;
  switch (basis) {
    case Basis::herd:
      c.tf_per_unit = 11.47;
      c.salary_usd_per_unit = 2944.0;
      break;
    case Basis::phd:
      c.tf_per_unit = 19.65;
      c.salary_usd_per_unit = 4696.0;
      break;
    case Basis::pub:
      c.tf_per_unit = 1.34;
      c.salary_usd_per_unit = 341.0;
      break;
  }
  return c;
}

std::vector<std::string> preset_names() { return {"survey-2025"}; }

std::vector<double> reference_grid(Basis basis) {
  switch (basis) {
    case Basis::herd: return {1900, 1500, 1200, 1000, 850, 750, 400, 200};
    case Basis::phd: return {800, 700, 600, 500, 400, 200};
    case Basis::pub: return {20000, 14000, 10000, 6000, 3000, 1000};
  }
  return {};
}

std::string serialize_coefficients(const BenchmarkCoefficients& c) {
  std::string out;
  out += "basis=" + std::string(basis_key(c.basis)) + "\n";
  out += "tf_per_unit=" + csv::format_double(c.tf_per_unit) + "\n";
  out += "salary_per_unit=" + csv::format_double(c.salary_usd_per_unit) + "\n";
  out += "salary_budget_fraction=" + csv::format_double(c.salary_budget_fraction) + "\n";
  return out;
}

BenchmarkCoefficients parse_coefficients(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::SchemaViolation, "coefficient file line " + std::to_string(line_no) + ": expected key=value");
    }
    auto key = line.substr(0, eq);
    auto value = line.substr(eq + 1);
    while (!key.empty() && key.back() == ' ') key.remove_suffix(1);
    while (!value.empty() && value.front() == ' ') value.remove_prefix(1);
    kv[std::string(key)] = std::string(value);
  }
  for (const char* required : {"basis", "tf_per_unit", "salary_per_unit"}) {
    if (!kv.contains(required)) {
      throw Error(ErrorKind::SchemaViolation, std::string("coefficient file: missing '") + required + "'");
    }
  }
  BenchmarkCoefficients c;
  c.basis = parse_basis(kv["basis"]);
  c.tf_per_unit = csv::parse_number(kv["tf_per_unit"], "tf_per_unit").value_or(0.0);
  c.salary_usd_per_unit = csv::parse_number(kv["salary_per_unit"], "salary_per_unit").value_or(0.0);
  if (kv.contains("salary_budget_fraction")) {
    c.salary_budget_fraction =
        csv::parse_number(kv["salary_budget_fraction"], "salary_budget_fraction").value_or(0.0);
  }
  validate(c);
  return c;
}

BenchmarkCoefficients load_coefficients(const std::filesystem::path& path) {
  return parse_coefficients(read_file(path));
}

}  // namespace cibench
