#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "cibench/benchmark.hpp"
#include "cibench/dataset.hpp"
#include "cibench/error.hpp"
#include "cibench/production_model.hpp"
#include "cibench/projection.hpp"
#include "cibench/relimp.hpp"
#include "cibench/stats.hpp"

namespace py = pybind11;
using namespace cibench;

namespace {

RegressionSpec make_spec(const std::vector<std::vector<double>>& x, const std::vector<double>& y,
                         std::vector<std::string> names, std::string output_name) {
  RegressionSpec spec;
  spec.output_name = std::move(output_name);
  if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "x and y differ in length");
  const std::size_t k = x.empty() ? 0 : x.front().size();
  if (names.empty()) {
    for (std::size_t j = 0; j < k; ++j) names.push_back("x" + std::to_string(j + 1));
  }
  spec.predictor_names = std::move(names);
  for (std::size_t i = 0; i < x.size(); ++i) spec.rows.push_back({x[i], y[i]});
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Production-function fits and investment benchmarks for research computing";

  py::register_exception<Error>(m, "CibenchError", PyExc_ValueError);

  py::class_<CoefficientEstimate>(m, "CoefficientEstimate")
      .def_readonly("name", &CoefficientEstimate::name)
      .def_readonly("estimate", &CoefficientEstimate::estimate)
      .def_readonly("standard_error", &CoefficientEstimate::standard_error)
      .def_readonly("t_statistic", &CoefficientEstimate::t_statistic)
      .def_readonly("p_value", &CoefficientEstimate::p_value);

  py::class_<RegressionFit>(m, "RegressionFit")
      .def_readonly("output_name", &RegressionFit::output_name)
      .def_readonly("intercept", &RegressionFit::intercept)
      .def_readonly("coefficients", &RegressionFit::coefficients)
      .def_readonly("r_squared", &RegressionFit::r_squared)
      .def_readonly("adj_r_squared", &RegressionFit::adj_r_squared)
      .def_readonly("n_obs", &RegressionFit::n_obs)
      .def_readonly("dof_residual", &RegressionFit::dof_residual)
      .def_readonly("residuals", &RegressionFit::residuals);

  py::class_<RelativeImportance>(m, "RelativeImportance")
      .def_readonly("output_name", &RelativeImportance::output_name)
      .def_readonly("predictor_names", &RelativeImportance::predictor_names)
      .def_readonly("shares", &RelativeImportance::shares)
      .def_readonly("total_r2", &RelativeImportance::total_r2);

  m.def(
      "fit_ols",
      [](const std::vector<std::vector<double>>& x, const std::vector<double>& y,
         std::vector<std::string> names, std::string output_name) {
        return fit_ols(make_spec(x, y, std::move(names), std::move(output_name)));
      },
      py::arg("x"), py::arg("y"), py::arg("predictor_names") = std::vector<std::string>{},
      py::arg("output_name") = "y", "OLS of y on an intercept plus the columns of x (rows of predictors).");
  m.def(
      "lmg",
      [](const std::vector<std::vector<double>>& x, const std::vector<double>& y,
         std::vector<std::string> names, std::string output_name) {
        return lmg(make_spec(x, y, std::move(names), std::move(output_name)));
      },
      py::arg("x"), py::arg("y"), py::arg("predictor_names") = std::vector<std::string>{},
      py::arg("output_name") = "y");
  m.def("adjusted_r2", &adjusted_r2, py::arg("r2"), py::arg("n"), py::arg("k"));
  m.def("t_pvalue", &t_pvalue, py::arg("t"), py::arg("dof"));
  m.def(
      "kendall_tau",
      [](const std::vector<double>& x, const std::vector<double>& y) { return kendall_tau(x, y); },
      py::arg("x"), py::arg("y"));
  m.def(
      "significance_stars", [](double p) { return std::string(significance_stars(p)); }, py::arg("p"));

  py::class_<GrowthEstimate>(m, "GrowthEstimate")
      .def_readonly("annual_rate", &GrowthEstimate::annual_rate)
      .def_readonly("n_intervals", &GrowthEstimate::n_intervals);
  py::class_<ProjectionCurve>(m, "ProjectionCurve")
      .def_readonly("base_year", &ProjectionCurve::base_year)
      .def_readonly("base_tf", &ProjectionCurve::base_tf)
      .def_readonly("annual_rate", &ProjectionCurve::annual_rate)
      .def_readonly("points", &ProjectionCurve::points);
  m.def(
      "estimate_growth",
      [](const std::vector<double>& annual_tf) { return estimate_growth(std::span<const double>(annual_tf)); },
      py::arg("annual_teraflops"));
  m.def("project_capacity", &project_capacity, py::arg("base_tf"), py::arg("base_year"), py::arg("rate"),
        py::arg("horizon"));

  py::enum_<Basis>(m, "Basis").value("herd", Basis::herd).value("phd", Basis::phd).value("pub", Basis::pub);
  py::class_<BenchmarkCoefficients>(m, "BenchmarkCoefficients")
      .def(py::init<>())
      .def_readwrite("basis", &BenchmarkCoefficients::basis)
      .def_readwrite("tf_per_unit", &BenchmarkCoefficients::tf_per_unit)
      .def_readwrite("salary_usd_per_unit", &BenchmarkCoefficients::salary_usd_per_unit)
      .def_readwrite("salary_budget_fraction", &BenchmarkCoefficients::salary_budget_fraction)
      .def_readwrite("n_institutions", &BenchmarkCoefficients::n_institutions);
  py::class_<SizingResult>(m, "SizingResult")
      .def_readonly("basis_value", &SizingResult::basis_value)
      .def_readonly("modeled_tf", &SizingResult::modeled_tf)
      .def_readonly("modeled_salaries", &SizingResult::modeled_salaries)
      .def_readonly("modeled_budget", &SizingResult::modeled_budget);
  m.def(
      "preset",
      [](const std::string& name, const std::string& basis) {
        auto c = preset(name, parse_basis(basis));
        if (!c) throw Error(ErrorKind::Usage, "unknown preset '" + name + "'");
        return *c;
      },
      py::arg("name"), py::arg("basis"));
  m.def("size_investment", &size_investment, py::arg("coeffs"), py::arg("basis_value"));

  py::class_<ObservationRow>(m, "ObservationRow")
      .def_readonly("institution", &ObservationRow::institution)
      .def_readonly("year", &ObservationRow::year)
      .def_readonly("teraflops", &ObservationRow::teraflops)
      .def_readonly("salaries", &ObservationRow::salaries)
      .def_readonly("herd", &ObservationRow::herd)
      .def_readonly("doctorates", &ObservationRow::doctorates)
      .def_readonly("publications", &ObservationRow::publications)
      .def_readonly("hi_impact_pubs", &ObservationRow::hi_impact_pubs);
  py::class_<PanelDataset>(m, "PanelDataset")
      .def_property_readonly("rows",
                             [](const PanelDataset& p) { return std::vector<ObservationRow>(p.rows().begin(), p.rows().end()); })
      .def_property_readonly("institutions", &PanelDataset::institutions)
      .def("__len__", &PanelDataset::size);
  m.def(
      "load_panel",
      [](const std::filesystem::path& path, bool strict) {
        IngestConfig config;
        config.strict = strict;
        return load_panel(path, config).panel;
      },
      py::arg("path"), py::arg("strict") = false);

  py::class_<OutputModel>(m, "OutputModel")
      .def_property_readonly("output", [](const OutputModel& o) { return std::string(output_key(o.output)); })
      .def_readonly("fit", &OutputModel::fit)
      .def_readonly("importance", &OutputModel::importance);
  py::class_<ModelSuite>(m, "ModelSuite")
      .def_readonly("scope", &ModelSuite::scope)
      .def_readonly("n_obs", &ModelSuite::n_obs)
      .def_readonly("models", &ModelSuite::models);
  m.def(
      "fit_suite", [](const PanelDataset& panel, const std::string& scope) { return fit_suite(panel, scope); },
      py::arg("panel"), py::arg("scope") = std::string(kCombinedScope));
}
