// Copyright 2026 The vdw-images Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force cross-check of the Green-function energies: the atom is
// replaced by a physical pair of point charges +q, -q a distance h apart, its
// electrostatic energy against explicit image charges is evaluated exactly,
// and the sequence is extrapolated to h -> 0 at fixed q h. Shares only the
// image construction with the other evaluators.

#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "vdw/core_types.hpp"
#include "vdw/image_method.hpp"

namespace vdw {

enum class DipolePlacement {
  centered, ///< charges at center -/+ h/2; error in h is even
  anchored, ///< +q at center, -q at center + h; error starts at O(h)
};

struct FiniteDipole {
  double charge = 0.0;
  Vec3 separation;  ///< from the positive to the negative charge
  Position center;
  DipolePlacement placement = DipolePlacement::centered;

  /// Dipole of magnitude `moment` along unit vector `dir` with spacing h.
  static FiniteDipole along(const Position &center, const Vec3 &dir, double moment, double h,
                            DipolePlacement placement = DipolePlacement::centered) {
    if (!(h > 0.0))
      throw InvalidArgument("finite dipole spacing must be positive");
    return {moment / h, h * dir, center, placement};
  }

  Position positive() const noexcept {
    return placement == DipolePlacement::centered ? center - 0.5 * separation : center;
  }
  Position negative() const noexcept {
    return placement == DipolePlacement::centered ? center + 0.5 * separation
                                                  : center + separation;
  }
};

/// Charge-image part of the electrostatic energy of a finite dipole,
/// (q^2 / 2 eps0) [G_H(+,+) - G_H(+,-) - G_H(-,+) + G_H(-,-)]; the divergent
/// self-energies are not included.
inline double finite_dipole_energy(const HomogeneousGreen &green, const FiniteDipole &fd,
                                   const UnitSystem &u = {}) {
  const Position p = fd.positive();
  const Position m = fd.negative();
  if (!physical_region(green.geometry, p) || !physical_region(green.geometry, m))
    throw RegionError("finite dipole charge outside the physical region");
  const double bracket = green(p, p) - green(p, m) - green(m, p) + green(m, m);
  return fd.charge * fd.charge / (2.0 * u.epsilon0()) * bracket;
}

inline double finite_dipole_energy(const GeometryConfig &g, const FiniteDipole &fd,
                                   const UnitSystem &u = {}) {
  return finite_dipole_energy(build_green(g), fd, u);
}

struct OracleSettings {
  /// Dipole spacings, strictly decreasing. Empty selects the default
  /// l * {1e-2, 5e-3, 2.5e-3, 1.25e-3}, l = distance to the conductor.
  std::vector<double> h_schedule;
  /// Relative size of the last extrapolation increment that is accepted.
  double rel_tol = 1e-6;
};

inline std::vector<double> default_h_schedule(const GeometryConfig &g, const Position &r0) {
  const double l = distance_to_surface(g, r0);
  return {1e-2 * l, 5e-3 * l, 2.5e-3 * l, 1.25e-3 * l};
}

/// Polynomial extrapolation to h = 0 in the variable h^2 (Neville).
/// Returns the estimate and the magnitude of the last increment.
inline std::pair<double, double> extrapolate_h2(const std::vector<double> &h,
                                                const std::vector<double> &values) {
  const std::size_t n = values.size();
  if (n == 0 || h.size() != n)
    throw InvalidArgument("extrapolate_h2: size mismatch");
  if (n == 1)
    return {values[0], 0.0};
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = h[i] * h[i];
  std::vector<double> col = values;
  double last = col[n - 1];
  double before = last;
  for (std::size_t j = 1; j < n; ++j) {
    before = col[n - 1];
    for (std::size_t i = n - 1; i >= j; --i)
      col[i] = (x[i - j] * col[i] - x[i] * col[i - 1]) / (x[i - j] - x[i]);
    last = col[n - 1];
  }
  return {last, std::abs(last - before)};
}

/// U(h) along one axis for a dipole of fixed moment sqrt(variance).
inline std::vector<double> oracle_sequence(const HomogeneousGreen &green, const Position &r0,
                                           const Vec3 &dir, double variance,
                                           const std::vector<double> &schedule,
                                           const UnitSystem &u = {},
                                           DipolePlacement placement = DipolePlacement::centered) {
  std::vector<double> out;
  out.reserve(schedule.size());
  const double moment = std::sqrt(variance);
  for (const double h : schedule)
    out.push_back(finite_dipole_energy(green, FiniteDipole::along(r0, dir, moment, h, placement), u));
  return out;
}

inline EnergyResult extrapolated_energy(const GeometryConfig &g, const AtomSpec &atom,
                                        const Position &r0, const OracleSettings &s = {},
                                        const UnitSystem &u = {}) {
  if (!physical_region(g, r0))
    throw RegionError("oracle: r0 outside the physical region");
  const std::vector<double> schedule = s.h_schedule.empty() ? default_h_schedule(g, r0)
                                                            : s.h_schedule;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0) || (i > 0 && !(schedule[i] < schedule[i - 1])))
      throw InvalidArgument("oracle: h schedule must be positive and strictly decreasing");
  }

  const HomogeneousGreen green = build_green(g);
  const auto axes = variance_axes(atom.variances, r0);
  const auto var = atom.variances.components();
  double value = 0.0;
  double err = 0.0;
  for (std::size_t m = 0; m < 3; ++m) {
    if (var[m] == 0.0)
      continue;
    const auto seq = oracle_sequence(green, r0, axes[m], var[m], schedule, u);
    const auto [v, e] = extrapolate_h2(schedule, seq);
    value += v;
    err += e;
  }
  if (err > s.rel_tol * std::abs(value))
    throw ConvergenceError("oracle: h -> 0 extrapolation did not converge");
  return {value, Method::oracle, err, u.mode};
}

} // namespace vdw
