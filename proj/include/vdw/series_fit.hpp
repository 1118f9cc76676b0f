// Copyright 2026 The vdw-images Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vdw/core_types.hpp"

namespace vdw {

/// Least-squares polynomial coefficients c_0..c_degree of y ~ sum c_k x^k.
/// The abscissae are rescaled to [-1, 1] internally for conditioning.
inline std::vector<double> fit_polynomial(std::span<const double> x, std::span<const double> y,
                                          int degree) {
  const auto n = static_cast<Eigen::Index>(x.size());
  if (degree < 0 || static_cast<std::size_t>(n) != y.size() || n <= degree)
    throw InvalidArgument("fit_polynomial: need more samples than coefficients");
  double lo = x[0], hi = x[0];
  for (double v : x) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  if (!(half > 0.0))
    throw InvalidArgument("fit_polynomial: abscissae must span an interval");

  Eigen::MatrixXd V(n, degree + 1);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = (x[i] - mid) / half;
    double p = 1.0;
    for (int k = 0; k <= degree; ++k) {
      V(i, k) = p;
      p *= t;
    }
    b(i) = y[i];
  }
  const Eigen::VectorXd a = V.colPivHouseholderQr().solve(b);

  // Re-expand sum a_k ((x - mid)/half)^k in powers of x.
  std::vector<double> c(degree + 1, 0.0);
  for (int k = 0; k <= degree; ++k) {
    // (x - mid)^k = sum_j C(k, j) x^j (-mid)^(k-j)
    double coeff = 1.0;
    for (int j = 0; j <= k; ++j) {
      const double term = coeff * std::pow(-mid, k - j);
      c[j] += a(k) / std::pow(half, k) * term;
      coeff = coeff * (k - j) / (j + 1);
    }
  }
  return c;
}

/// Fit of f on `points` evenly spaced samples of [lo, hi].
inline std::vector<double> fit_series(const std::function<double(double)> &f, double lo, double hi,
                                      int degree, int points = 200) {
  std::vector<double> x(points), y(points);
  for (int i = 0; i < points; ++i) {
    x[i] = lo + (hi - lo) * i / (points - 1);
    y[i] = f(x[i]);
  }
  return fit_polynomial(x, y, degree);
}

/// Slope of log|y| against log x by least squares.
inline double loglog_slope(std::span<const double> x, std::span<const double> y) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(std::abs(y[i])));
  }
  return fit_polynomial(lx, ly, 1)[1];
}

} // namespace vdw
