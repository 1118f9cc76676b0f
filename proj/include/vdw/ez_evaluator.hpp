// Copyright 2026 The vdw-images Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "vdw/core_types.hpp"
#include "vdw/image_method.hpp"

namespace vdw {

/// Finite-difference controls for the mixed derivative d_m d'_m G_H.
///
/// The initial step is base_step * max(distance to the conductor, 0.01 |r0|);
/// each Richardson level halves it once more.
struct DiffSettings {
  double base_step = 5e-2;
  int richardson_levels = 3;

  void validate() const {
    if (!(base_step > 0.0 && base_step < 0.1))
      throw InvalidArgument("base_step must lie in (0, 0.1)");
    if (richardson_levels < 1 || richardson_levels > 6)
      throw InvalidArgument("richardson_levels must lie in [1, 6]");
  }
};

enum class Axis { x, y, z };

inline Vec3 unit(Axis a) noexcept {
  switch (a) {
  case Axis::x: return {1, 0, 0};
  case Axis::y: return {0, 1, 0};
  case Axis::z: return {0, 0, 1};
  }
  return {};
}

struct Derivative {
  double value = 0.0;
  double err = 0.0;
};

inline double local_scale(const GeometryConfig &g, const Position &r0) noexcept {
  return std::max(distance_to_surface(g, r0), 0.01 * norm(r0));
}

/// Raw tensor-product stencil
/// [G(+,+) - G(+,-) - G(-,+) + G(-,-)] / (4h^2), second order in h.
inline double mixed_stencil(const HomogeneousGreen &green, const Position &r0, const Vec3 &dir,
                            double h) {
  const Position p = r0 + h * dir;
  const Position m = r0 - h * dir;
  return (green(p, p) - green(p, m) - green(m, p) + green(m, m)) / (4.0 * h * h);
}

/// d_e d'_e G_H(r, r')|_{r=r'=r0} along the unit vector `dir`, Richardson
/// extrapolated over successively halved steps. `err` is the magnitude of the
/// final extrapolation increment.
inline Derivative mixed_second(const HomogeneousGreen &green, const Position &r0, const Vec3 &dir,
                               const DiffSettings &s = {}) {
  s.validate();
  const auto &g = green.geometry;
  if (!physical_region(g, r0))
    throw RegionError("mixed_second: r0 outside the physical region");

  const double dist = distance_to_surface(g, r0);
  const double h0 = s.base_step * local_scale(g, r0);
  if (!(h0 < dist))
    throw RegionError("mixed_second: stencil would cross the conductor");
  const int levels = s.richardson_levels;
  const double h_min = std::ldexp(h0, -levels);
  if (h_min < 1e3 * std::numeric_limits<double>::epsilon() * norm(r0))
    throw StepUnderflow("mixed_second: step below round-off floor");

  // Richardson tableau on even powers of h.
  std::vector<double> prev, row;
  double increment = 0.0;
  for (int k = 0; k <= levels; ++k) {
    row.assign(static_cast<std::size_t>(k) + 1, 0.0);
    row[0] = mixed_stencil(green, r0, dir, std::ldexp(h0, -k));
    double factor = 1.0;
    for (int j = 1; j <= k; ++j) {
      factor *= 4.0;
      row[j] = row[j - 1] + (row[j - 1] - prev[j - 1]) / (factor - 1.0);
    }
    if (k == levels)
      increment = std::abs(row[k] - row[k - 1]);
    prev.swap(row);
  }
  return {prev.back(), increment};
}

inline Derivative mixed_second(const HomogeneousGreen &green, const Position &r0, Axis axis,
                               const DiffSettings &s = {}) {
  return mixed_second(green, r0, unit(axis), s);
}

/// U = (1/2 eps0) sum_m <d_m^2> d_m d'_m G_H at r0, by numerical
/// differentiation of the image-charge Green function.
inline EnergyResult energy_numeric(const GeometryConfig &g, const AtomSpec &atom,
                                   const Position &r0, const DiffSettings &s = {},
                                   const UnitSystem &u = {}) {
  if (!physical_region(g, r0))
    throw RegionError("energy_numeric: r0 outside the physical region");
  const HomogeneousGreen green = build_green(g);
  const auto axes = variance_axes(atom.variances, r0);
  const auto var = atom.variances.components();

  double value = 0.0;
  double err = 0.0;
  for (std::size_t m = 0; m < 3; ++m) {
    if (var[m] == 0.0)
      continue;
    const Derivative d = mixed_second(green, r0, axes[m], s);
    value += var[m] * d.value;
    err += var[m] * d.err;
  }
  const double pref = 1.0 / (2.0 * u.epsilon0());
  return {pref * value, Method::numeric_ez, pref * err, u.mode};
}

} // namespace vdw
