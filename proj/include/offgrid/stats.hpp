#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "offgrid/errors.hpp"

namespace offgrid {

/// Empirical quantile as the ceil(q*N)-th order statistic (1-indexed).
/// q = 1 returns the maximum, q = 0 the minimum.
inline double empirical_quantile(std::vector<double> values, double q) {
  if (values.empty())
    throw InvalidInputError("empirical_quantile: empty input");
  if (!(q >= 0.0 && q <= 1.0))
    throw InvalidInputError("empirical_quantile: q must be in [0, 1]");
  const auto n = static_cast<std::ptrdiff_t>(values.size());
  auto rank = static_cast<std::ptrdiff_t>(
      std::ceil(q * static_cast<double>(n)));
  rank = std::clamp<std::ptrdiff_t>(rank, 1, n);
  std::nth_element(values.begin(), values.begin() + (rank - 1), values.end());
  return values[static_cast<std::size_t>(rank - 1)];
}

inline double mean(const std::vector<double>& v) {
  if (v.empty()) throw InvalidInputError("mean: empty input");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double variance(const std::vector<double>& v) {
  if (v.size() < 2) throw InvalidInputError("variance: need two samples");
  const double mu = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - mu) * (x - mu);
  return s / static_cast<double>(v.size() - 1);
}

/// Excess-free kurtosis E[(x-mu)^4] / Var^2 (Gaussian value is 3).
inline double kurtosis(const std::vector<double>& v) {
  if (v.size() < 4) throw InvalidInputError("kurtosis: need four samples");
  const double mu = mean(v);
  double m2 = 0.0;
  double m4 = 0.0;
  for (double x : v) {
    const double d = x - mu;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= static_cast<double>(v.size());
  m4 /= static_cast<double>(v.size());
  return m4 / (m2 * m2);
}

/// Kolmogorov-Smirnov statistic of a sample against a CDF.
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
  if (samples.empty()) throw InvalidInputError("ks_statistic: empty input");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max({d, std::abs(f - lo), std::abs(f - hi)});
  }
  return d;
}

/// Standard error of a binomial proportion estimate.
inline double binomial_stderr(double p, std::int64_t n) {
  if (n <= 0) throw InvalidInputError("binomial_stderr: n must be positive");
  return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
}

}  // namespace offgrid
