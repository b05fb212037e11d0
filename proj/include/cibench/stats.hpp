#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cibench {

struct DesignRow {
  std::vector<double> predictors;
  double response = 0.0;
};

/// Response regressed on an intercept plus the named predictors.
struct RegressionSpec {
  std::string output_name;
  std::vector<std::string> predictor_names;
  std::vector<DesignRow> rows;
};

struct CoefficientEstimate {
  std::string name;
  double estimate = 0.0;
  double standard_error = 0.0;
  double t_statistic = 0.0;
  double p_value = 1.0;
};

struct RegressionFit {
  std::string output_name;
  CoefficientEstimate intercept;
  std::vector<CoefficientEstimate> coefficients;
  double r_squared = 0.0;
  double adj_r_squared = 0.0;
  std::size_t n_obs = 0;
  std::size_t dof_residual = 0;
  double residual_sum_squares = 0.0;
  double total_sum_squares = 0.0;
  std::vector<double> residuals;
};

/// Relative rank tolerance for the least-squares solve: a diagonal entry of R
/// below this times the largest design column norm marks the design singular.
inline constexpr double kRankTolerance = 1e-10;

/// Least squares via Householder QR, with classical inference from
/// s^2 = RSS / (n - k - 1) and two-sided Student-t p-values.
///
/// Throws InsufficientRows when n < k + 2, SingularDesign for a constant or
/// collinear predictor, DegenerateResponse when the response has no variance,
/// DomainError for non-finite data and InvalidValue for ragged rows.
RegressionFit fit_ols(const RegressionSpec& spec);

/// 1 - (1 - r2)(n - 1)/(n - k - 1). Throws InsufficientRows if n <= k + 1.
double adjusted_r2(double r2, std::size_t n, std::size_t k);

/// Regularized incomplete beta I_x(a, b), continued fraction (modified Lentz)
/// with argument switching.
double regularized_incomplete_beta(double a, double b, double x);

/// Two-sided tail probability P(|T| >= |t|) for Student-t with `dof` degrees
/// of freedom. Throws DomainError for NaN t or dof < 1.
double t_pvalue(double t, double dof);

/// Kendall tau-b, computed in O(n log n) (Knight's algorithm).
/// Throws LengthMismatch, InsufficientRows for n < 2, DomainError for
/// non-finite values and DegenerateSample when either side is all ties.
double kendall_tau(std::span<const double> x, std::span<const double> y);

/// "***" p<0.001, "**" p<0.01, "*" p<0.05, otherwise "".
std::string_view significance_stars(double p);

}  // namespace cibench
