#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cibench/error.hpp"
#include "cibench/stats.hpp"

using namespace cibench;

namespace {

RegressionSpec two_predictor_spec(std::vector<std::array<double, 3>> rows) {
  RegressionSpec spec{"y", {"x1", "x2"}, {}};
  for (auto [a, b, y] : rows) spec.rows.push_back({{a, b}, y});
  return spec;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected cibench::Error");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("fit_ols recovers exactly linear data") {
  auto fit = fit_ols(two_predictor_spec({{1, 0, 3}, {0, 1, 5}, {1, 1, 8}, {0, 0, 0}}));
  CHECK(fit.intercept.estimate == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fit.coefficients[0].estimate == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.coefficients[1].estimate == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.n_obs == 4);
  CHECK(fit.dof_residual == 1);
  for (const auto& c : fit.coefficients) {
    CHECK(c.p_value >= 0.0);
    CHECK(c.p_value <= 1.0);
  }
}

TEST_CASE("fit_ols error paths") {
  CHECK(kind_of([] { fit_ols(two_predictor_spec({{1, 2, 4}, {2, 3, 4}, {3, 1, 4}, {4, 5, 4}})); }) ==
        ErrorKind::DegenerateResponse);
  CHECK(kind_of([] { fit_ols(two_predictor_spec({{1, 2, 4}, {2, 3, 5}, {3, 1, 7}})); }) ==
        ErrorKind::InsufficientRows);
  // Constant predictor is collinear with the intercept.
  CHECK(kind_of([] { fit_ols(two_predictor_spec({{1, 7, 4}, {2, 7, 5}, {3, 7, 7}, {4, 7, 6}})); }) ==
        ErrorKind::SingularDesign);
  // x2 = 2 x1.
  CHECK(kind_of([] { fit_ols(two_predictor_spec({{1, 2, 4}, {2, 4, 5}, {3, 6, 7}, {4, 8, 6}, {5, 10, 9}})); }) ==
        ErrorKind::SingularDesign);
  CHECK(kind_of([] { fit_ols(two_predictor_spec({{1, 2, NAN}, {2, 4, 5}, {3, 1, 7}, {4, 8, 6}})); }) ==
        ErrorKind::DomainError);
}

TEST_CASE("fit_ols matches the normal-equations oracle on 20 noisy rows") {
  std::mt19937_64 rng(20);
  auto spec = oracle::random_spec(rng, 20, 2);
  auto fit = fit_ols(spec);
  auto ref = oracle::normal_equations(spec);
  CHECK(oracle::relative_error(fit.intercept.estimate, ref.beta[0]) < 1e-9);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(oracle::relative_error(fit.coefficients[j].estimate, ref.beta[j + 1]) < 1e-9);
    CHECK(oracle::relative_error(fit.coefficients[j].standard_error, ref.se[j + 1]) < 1e-8);
  }
  CHECK(fit.r_squared == doctest::Approx(ref.r_squared).epsilon(1e-10));
}

TEST_CASE("OLS residuals sum to zero and are orthogonal to predictors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 1 + trial % 4;
    auto spec = oracle::random_spec(rng, 8 + trial % 30, k);
    auto fit = fit_ols(spec);
    double sum = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < spec.rows.size(); ++i) {
      sum += fit.residuals[i];
      scale += std::fabs(spec.rows[i].response);
    }
    CHECK(std::fabs(sum) <= 1e-8 * scale);
    for (std::size_t j = 0; j < k; ++j) {
      double dot = 0.0, xscale = 0.0;
      for (std::size_t i = 0; i < spec.rows.size(); ++i) {
        dot += fit.residuals[i] * spec.rows[i].predictors[j];
        xscale += std::fabs(spec.rows[i].predictors[j] * spec.rows[i].response);
      }
      CHECK(std::fabs(dot) <= 1e-8 * xscale);
    }
    CHECK(fit.adj_r_squared <= fit.r_squared);
    CHECK(fit.r_squared == doctest::Approx(1.0 - fit.residual_sum_squares / fit.total_sum_squares));
  }
}

TEST_CASE("rescaling a predictor rescales its coefficient and leaves t and R^2 alone") {
  std::mt19937_64 rng(11);
  auto spec = oracle::random_spec(rng, 30, 2);
  auto scaled = spec;
  const double c = 1000.0;
  for (auto& row : scaled.rows) row.predictors[1] = c * row.predictors[1] + 5.0;
  auto a = fit_ols(spec);
  auto b = fit_ols(scaled);
  CHECK(b.r_squared == doctest::Approx(a.r_squared).epsilon(1e-10));
  CHECK(b.coefficients[1].estimate * c == doctest::Approx(a.coefficients[1].estimate).epsilon(1e-9));
  CHECK(b.coefficients[1].standard_error * c == doctest::Approx(a.coefficients[1].standard_error).epsilon(1e-9));
  CHECK(b.coefficients[1].t_statistic == doctest::Approx(a.coefficients[1].t_statistic).epsilon(1e-9));
  CHECK(b.coefficients[1].p_value == doctest::Approx(a.coefficients[1].p_value).epsilon(1e-9));
  CHECK(b.coefficients[0].estimate == doctest::Approx(a.coefficients[0].estimate).epsilon(1e-9));
}

TEST_CASE("adjusted_r2") {
  auto round3 = [](double v) { return std::round(v * 1000.0) / 1000.0; };
  CHECK(round3(adjusted_r2(0.634, 86, 2)) == doctest::Approx(0.625));
  CHECK(round3(adjusted_r2(0.535, 86, 2)) == doctest::Approx(0.524));
  CHECK(adjusted_r2(1.0, 10, 3) == 1.0);
  CHECK(kind_of([] { adjusted_r2(0.5, 3, 2); }) == ErrorKind::InsufficientRows);
  CHECK(adjusted_r2(0.4, 30, 2) < 0.4);
}

TEST_CASE("t_pvalue") {
  CHECK(t_pvalue(0.0, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(t_pvalue(0.0, 83) == doctest::Approx(1.0).epsilon(1e-14));

  const double oracle_p = oracle::t_two_sided_by_quadrature(2.0, 10);
  CHECK(oracle_p == doctest::Approx(0.07339).epsilon(1e-4 / 0.07339));
  CHECK(std::fabs(t_pvalue(2.0, 10) - oracle_p) < 1e-8);

  const double p = t_pvalue(0.196 / 0.090, 83);
  CHECK(p == doctest::Approx(0.032).epsilon(0.001 / 0.032));
  CHECK(significance_stars(p) == "*");

  CHECK(t_pvalue(-2.0, 10) == t_pvalue(2.0, 10));
  CHECK(t_pvalue(INFINITY, 5) == 0.0);
  CHECK(kind_of([] { t_pvalue(NAN, 5); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { t_pvalue(1.0, 0); }) == ErrorKind::DomainError);
}

TEST_CASE("t_pvalue is monotone in |t| and tends to the normal tail") {
  for (double dof : {1.0, 3.0, 30.0}) {
    double prev = 1.0;
    for (double t = 0.05; t < 10.0; t += 0.05) {
      const double p = t_pvalue(t, dof);
      CHECK(p < prev);
      prev = p;
    }
  }
  for (double t : {0.5, 1.0, 1.96, 2.5, 3.5}) {
    CHECK(std::fabs(t_pvalue(t, 1e6) - std::erfc(t / std::sqrt(2.0))) < 1e-6);
  }
}

TEST_CASE("regularized incomplete beta edge values") {
  CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
  // I_x(1, 1) = x; I_x(a, 1) = x^a.
  CHECK(regularized_incomplete_beta(1.0, 1.0, 0.3) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(regularized_incomplete_beta(2.5, 1.0, 0.4) == doctest::Approx(std::pow(0.4, 2.5)).epsilon(1e-12));
  CHECK(kind_of([] { regularized_incomplete_beta(-1.0, 1.0, 0.5); }) == ErrorKind::DomainError);
}

TEST_CASE("kendall_tau examples") {
  std::vector<double> a{1, 2, 3};
  CHECK(kendall_tau(a, a) == doctest::Approx(1.0));
  CHECK(kendall_tau(a, std::vector<double>{3, 2, 1}) == doctest::Approx(-1.0));
  CHECK(kendall_tau(a, std::vector<double>{1, 3, 2}) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(kind_of([&] { kendall_tau(a, std::vector<double>{1, 2}); }) == ErrorKind::LengthMismatch);
  CHECK(kind_of([&] { kendall_tau(a, std::vector<double>{5, 5, 5}); }) == ErrorKind::DegenerateSample);
  CHECK(kind_of([&] { kendall_tau(std::vector<double>{1}, std::vector<double>{1}); }) ==
        ErrorKind::InsufficientRows);
}

TEST_CASE("kendall_tau matches pair counting, with ties") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> small(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 30;
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = small(rng);
      y[i] = small(rng) + 0.5 * x[i];
    }
    const bool degenerate = std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; }) ||
                            std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; });
    if (degenerate) continue;
    CHECK(std::fabs(kendall_tau(x, y) - oracle::kendall_tau_b(x, y)) < 1e-12);
  }
}

TEST_CASE("kendall_tau symmetry properties") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> x(12), y(12);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = std::round(g(rng) * 3);
      y[i] = x[i] + std::round(g(rng) * 3);
    }
    const double tau = kendall_tau(x, y);
    std::vector<double> neg(y.size()), mono(x.size());
    std::transform(y.begin(), y.end(), neg.begin(), [](double v) { return -v; });
    std::transform(x.begin(), x.end(), mono.begin(), [](double v) { return std::exp(v / 4.0) + 3.0; });
    CHECK(kendall_tau(x, neg) == doctest::Approx(-tau).epsilon(1e-14));
    CHECK(kendall_tau(mono, y) == doctest::Approx(tau).epsilon(1e-14));
    CHECK(kendall_tau(y, x) == doctest::Approx(tau).epsilon(1e-14));
  }
}

TEST_CASE("significance_stars thresholds are strict") {
  CHECK(significance_stars(0.0005) == "***");
  CHECK(significance_stars(0.001) == "**");
  CHECK(significance_stars(0.005) == "**");
  CHECK(significance_stars(0.03) == "*");
  CHECK(significance_stars(0.05) == "");
  CHECK(significance_stars(0.9) == "");
}
