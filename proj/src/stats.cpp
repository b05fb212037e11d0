#include "cibench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "cibench/error.hpp"

namespace cibench {

namespace {

// Column-major n x p matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return data[j * rows + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data[j * rows + i]; }
};

void fill_inference(CoefficientEstimate& c, std::size_t dof) {
  if (c.standard_error > 0.0) {
    c.t_statistic = c.estimate / c.standard_error;
    c.p_value = t_pvalue(c.t_statistic, static_cast<double>(dof));
  } else if (c.estimate == 0.0) {
    c.t_statistic = 0.0;
    c.p_value = 1.0;
  } else {
    c.t_statistic = std::copysign(std::numeric_limits<double>::infinity(), c.estimate);
    c.p_value = 0.0;
  }
}

// Continued fraction for I_x(a, b), valid for x < (a + 1)/(a + b + 2).
double beta_continued_fraction(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-12;
  constexpr int kMaxIter = 10000;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

// I_x(a, b) given both x and 1 - x, so callers can supply an accurate
// complement.
double incomplete_beta(double a, double b, double x, double one_minus_x) {
  if (x <= 0.0) return 0.0;
  if (one_minus_x <= 0.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log(one_minus_x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, one_minus_x) / b;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || std::isnan(x) || x < 0.0 || x > 1.0) {
    throw Error(ErrorKind::DomainError, "incomplete beta: arguments out of domain");
  }
  return incomplete_beta(a, b, x, 1.0 - x);
}

double t_pvalue(double t, double dof) {
  if (std::isnan(t) || std::isnan(dof)) throw Error(ErrorKind::DomainError, "t_pvalue: NaN input");
  if (dof < 1.0) throw Error(ErrorKind::DomainError, "t_pvalue: dof must be >= 1");
  if (std::isinf(t)) return 0.0;
  const double t2 = t * t;
  const double denom = dof + t2;
  const double p = incomplete_beta(0.5 * dof, 0.5, dof / denom, t2 / denom);
  return std::clamp(p, 0.0, 1.0);
}

double adjusted_r2(double r2, std::size_t n, std::size_t k) {
  if (n <= k + 1) {
    throw Error(ErrorKind::InsufficientRows, "adjusted R^2 needs n > k + 1");
  }
  if (std::isnan(r2) || r2 < 0.0 || r2 > 1.0) {
    throw Error(ErrorKind::DomainError, "R^2 outside [0, 1]");
  }
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return 1.0 - (1.0 - r2) * (nd - 1.0) / (nd - kd - 1.0);
}

RegressionFit fit_ols(const RegressionSpec& spec) {
  const std::size_t n = spec.rows.size();
  const std::size_t k = spec.predictor_names.size();
  const std::size_t p = k + 1;
  if (n < k + 2) {
    throw Error(ErrorKind::InsufficientRows,
                spec.output_name + ": " + std::to_string(n) + " rows for " + std::to_string(k) +
                    " predictors (need at least " + std::to_string(k + 2) + ")");
  }

  Matrix a(n, p);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = spec.rows[i];
    if (row.predictors.size() != k) {
      throw Error(ErrorKind::InvalidValue, spec.output_name + ": design row has wrong width");
    }
    a(i, 0) = 1.0;
    for (std::size_t j = 0; j < k; ++j) a(i, j + 1) = row.predictors[j];
    y[i] = row.response;
    if (!std::isfinite(y[i]) ||
        !std::all_of(row.predictors.begin(), row.predictors.end(), [](double v) { return std::isfinite(v); })) {
      throw Error(ErrorKind::DomainError, spec.output_name + ": non-finite value in design");
    }
  }

  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double tss = 0.0;
  for (double v : y) tss += (v - mean_y) * (v - mean_y);
  if (std::all_of(y.begin(), y.end(), [&](double v) { return v == y.front(); }) || tss == 0.0) {
    throw Error(ErrorKind::DegenerateResponse, spec.output_name + ": response has zero variance");
  }

  double max_norm = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a(i, j) * a(i, j);
    max_norm = std::max(max_norm, std::sqrt(s));
  }

  // Householder QR; R overwrites the upper triangle of `a`, Q^T is applied to qty.
  std::vector<double> qty = y;
  std::vector<double> v(n);
  for (std::size_t j = 0; j < p; ++j) {
    double norm = 0.0;
    for (std::size_t i = j; i < n; ++i) norm += a(i, j) * a(i, j);
    norm = std::sqrt(norm);
    if (norm <= kRankTolerance * max_norm) {
      const std::string name = j == 0 ? "(Intercept)" : spec.predictor_names[j - 1];
      throw Error(ErrorKind::SingularDesign,
                  spec.output_name + ": design is rank deficient at column '" + name + "'");
    }
    const double alpha = a(j, j) > 0.0 ? -norm : norm;
    for (std::size_t i = j; i < n; ++i) v[i] = a(i, j);
    v[j] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = j; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 > 0.0) {
      for (std::size_t c = j; c < p; ++c) {
        double dot = 0.0;
        for (std::size_t i = j; i < n; ++i) dot += v[i] * a(i, c);
        const double f = 2.0 * dot / vnorm2;
        for (std::size_t i = j; i < n; ++i) a(i, c) -= f * v[i];
      }
      double dot = 0.0;
      for (std::size_t i = j; i < n; ++i) dot += v[i] * qty[i];
      const double f = 2.0 * dot / vnorm2;
      for (std::size_t i = j; i < n; ++i) qty[i] -= f * v[i];
    }
    a(j, j) = alpha;
    for (std::size_t i = j + 1; i < n; ++i) a(i, j) = 0.0;
  }

  // Back substitution R beta = (Q^T y)[0:p].
  std::vector<double> beta(p);
  for (std::size_t jj = p; jj-- > 0;) {
    double s = qty[jj];
    for (std::size_t c = jj + 1; c < p; ++c) s -= a(jj, c) * beta[c];
    beta[jj] = s / a(jj, jj);
  }

  // R^{-1}, upper triangular; Var(beta) = s^2 R^{-1} R^{-T}.
  Matrix rinv(p, p);
  for (std::size_t c = 0; c < p; ++c) {
    rinv(c, c) = 1.0 / a(c, c);
    for (std::size_t r = c; r-- > 0;) {
      double s = 0.0;
      for (std::size_t m = r + 1; m <= c; ++m) s += a(r, m) * rinv(m, c);
      rinv(r, c) = -s / a(r, r);
    }
  }

  RegressionFit fit;
  fit.output_name = spec.output_name;
  fit.n_obs = n;
  fit.dof_residual = n - k - 1;
  fit.residuals.resize(n);
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double yhat = beta[0];
    for (std::size_t j = 0; j < k; ++j) yhat += beta[j + 1] * spec.rows[i].predictors[j];
    fit.residuals[i] = y[i] - yhat;
    rss += fit.residuals[i] * fit.residuals[i];
  }
  fit.residual_sum_squares = rss;
  fit.total_sum_squares = tss;
  fit.r_squared = std::clamp(1.0 - rss / tss, 0.0, 1.0);
  fit.adj_r_squared = adjusted_r2(fit.r_squared, n, k);

  const double s2 = rss / static_cast<double>(fit.dof_residual);
  auto estimate = [&](std::size_t j, std::string name) {
    CoefficientEstimate c;
    c.name = std::move(name);
    c.estimate = beta[j];
    double var = 0.0;
    for (std::size_t m = j; m < p; ++m) var += rinv(j, m) * rinv(j, m);
    c.standard_error = std::sqrt(s2 * var);
    fill_inference(c, fit.dof_residual);
    return c;
  };
  fit.intercept = estimate(0, "(Intercept)");
  for (std::size_t j = 0; j < k; ++j) fit.coefficients.push_back(estimate(j + 1, spec.predictor_names[j]));
  return fit;
}

namespace {

// Sorts `v` and returns the number of inversions (pairs i < j, v[i] > v[j]).
std::int64_t count_inversions(std::vector<double>& v) {
  std::vector<double> buf(v.size());
  std::int64_t swaps = 0;
  for (std::size_t width = 1; width < v.size(); width *= 2) {
    for (std::size_t lo = 0; lo < v.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, v.size());
      const std::size_t hi = std::min(lo + 2 * width, v.size());
      std::size_t i = lo, j = mid, out = lo;
      while (i < mid && j < hi) {
        if (v[j] < v[i]) {
          swaps += static_cast<std::int64_t>(mid - i);
          buf[out++] = v[j++];
        } else {
          buf[out++] = v[i++];
        }
      }
      while (i < mid) buf[out++] = v[i++];
      while (j < hi) buf[out++] = v[j++];
    }
    v.swap(buf);
  }
  return swaps;
}

template <class Eq>
std::int64_t tied_pairs(std::size_t n, Eq equal) {
  std::int64_t pairs = 0;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i < n && equal(i - 1, i)) {
      ++run;
    } else {
      pairs += static_cast<std::int64_t>(run) * static_cast<std::int64_t>(run - 1) / 2;
      run = 1;
    }
  }
  return pairs;
}

}  // namespace

double kendall_tau(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::LengthMismatch, "kendall_tau: samples differ in length");
  }
  const std::size_t n = x.size();
  if (n < 2) throw Error(ErrorKind::InsufficientRows, "kendall_tau: need at least 2 observations");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw Error(ErrorKind::DomainError, "kendall_tau: non-finite value");
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
  });

  const std::int64_t n0 = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  const std::int64_t x_ties = tied_pairs(n, [&](std::size_t a, std::size_t b) {
    return x[order[a]] == x[order[b]];
  });
  const std::int64_t joint_ties = tied_pairs(n, [&](std::size_t a, std::size_t b) {
    return x[order[a]] == x[order[b]] && y[order[a]] == y[order[b]];
  });

  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
  const std::int64_t swaps = count_inversions(ys);
  const std::int64_t y_ties = tied_pairs(n, [&](std::size_t a, std::size_t b) { return ys[a] == ys[b]; });

  const std::int64_t denom_x = n0 - x_ties;
  const std::int64_t denom_y = n0 - y_ties;
  if (denom_x == 0 || denom_y == 0) {
    throw Error(ErrorKind::DegenerateSample, "kendall_tau: a sample is entirely tied");
  }
  const std::int64_t numer = n0 - x_ties - y_ties + joint_ties - 2 * swaps;
  const double tau = static_cast<double>(numer) /
                     std::sqrt(static_cast<double>(denom_x) * static_cast<double>(denom_y));
  return std::clamp(tau, -1.0, 1.0);
}

std::string_view significance_stars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

}  // namespace cibench
