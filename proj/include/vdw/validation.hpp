// Copyright 2026 The vdw-images Authors
// SPDX-License-Identifier: Apache-2.0

// Property checks shared by the `vdw validate` command and the test suites.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "vdw/closed_form.hpp"
#include "vdw/core_types.hpp"
#include "vdw/ez_evaluator.hpp"
#include "vdw/image_method.hpp"
#include "vdw/oracle.hpp"
#include "vdw/series_fit.hpp"

namespace vdw::validation {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

inline CheckResult make_check(std::string name, double residual, double tol, std::string note = {}) {
  return {std::move(name), residual, tol, residual <= tol, std::move(note)};
}

inline double rel_diff(double a, double b) noexcept {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

/// Uniform-ish points in the physical region at least `margin` from the
/// conductor, inside a box of half-width `extent` (unit radius geometries).
inline std::vector<Position> sample_physical(const GeometryConfig &g, std::size_t n,
                                             std::mt19937_64 &rng, double extent = 5.0,
                                             double margin = 0.05) {
  std::uniform_real_distribution<double> xy(-extent, extent);
  std::uniform_real_distribution<double> zz(g.kind == GeometryKind::Plane ||
                                                    g.kind == GeometryKind::BossHat
                                                ? 0.0
                                                : -extent,
                                            extent);
  std::vector<Position> out;
  out.reserve(n);
  while (out.size() < n) {
    const Position p{xy(rng), xy(rng), zz(rng)};
    if (physical_region(g, p) && distance_to_surface(g, p) > margin)
      out.push_back(p);
  }
  return out;
}

inline const std::vector<GeometryConfig> &grounded_geometries() {
  static const std::vector<GeometryConfig> gs{GeometryConfig::plane(),
                                              GeometryConfig::grounded_sphere(1.0),
                                              GeometryConfig::boss_hat(1.0)};
  return gs;
}

// ---------------------------------------------------------------------------

/// Dirichlet residual on 1000 random (surface point, source) pairs per
/// grounded geometry, plus the isolated-sphere gradient condition.
inline std::vector<CheckResult> check_boundary(std::uint64_t seed, std::size_t pairs = 1000) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  for (const auto &g : grounded_geometries()) {
    const auto green = build_green(g);
    const auto surf = surface_sample(g, pairs, seed + 1);
    const auto src = sample_physical(g, pairs, rng);
    double worst = 0.0;
    for (std::size_t i = 0; i < pairs; ++i)
      worst = std::max(worst, std::abs(bc_residual(green, surf[i], src[i])));
    out.push_back(make_check("bc/" + std::string(to_string(g.kind)), worst, 1e-11));
  }
  const auto iso = GeometryConfig::isolated_sphere(1.0);
  const auto green = build_green(iso);
  const auto surf = surface_sample(iso, 200, seed + 2);
  const auto src = sample_physical(iso, 200, rng);
  double worst = 0.0;
  for (std::size_t i = 0; i < surf.size(); ++i)
    worst = std::max(worst, bc_residual(green, surf[i], src[i]) * norm2(src[i]));
  out.push_back(make_check("bc/isphere-gradient", worst, 1e-8,
                           "scaled by |r'|^2; finite-difference gradient"));
  return out;
}

/// G_H(r, r') = G_H(r', r) on 1000 random pairs per geometry.
inline std::vector<CheckResult> check_symmetry(std::uint64_t seed, std::size_t pairs = 1000) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  auto gs = grounded_geometries();
  gs.push_back(GeometryConfig::isolated_sphere(1.0));
  for (const auto &g : gs) {
    const auto green = build_green(g);
    const auto a = sample_physical(g, pairs, rng);
    const auto b = sample_physical(g, pairs, rng);
    double worst = 0.0;
    for (std::size_t i = 0; i < pairs; ++i)
      worst = std::max(worst, rel_diff(green(a[i], b[i]), green(b[i], a[i])));
    // The isolated sphere's image term and supplement cancel at large
    // separation, which costs a couple of digits.
    const double tol = g.kind == GeometryKind::IsolatedSphere ? 1e-9 : 1e-11;
    out.push_back(make_check("symmetry/" + std::string(to_string(g.kind)), worst, tol));
  }
  return out;
}

/// R -> 0 boss hat, R -> infinity sphere, and the small-sphere limit.
inline std::vector<CheckResult> check_limits() {
  std::vector<CheckResult> out;
  const UnitSystem u = UnitSystem::reduced();
  const auto iso = DipoleVariances::isotropic(1.0, Frame::cylindrical_local);

  {
    double worst = 0.0;
    for (const Position p : {Position{0.0, 0.0, 1.0}, Position{0.5, 0.0, 1.0},
                             Position{2.0, 0.0, 0.3}}) {
      const double rho = to_cylindrical(p).rho;
      const double plane = u_plane(iso, p.z, u).value;
      const double closed = u_bosshat_from_images(iso, rho, p.z, 1e-6, u).value;
      const double numeric =
          energy_numeric(GeometryConfig::boss_hat(1e-6), AtomSpec(iso), p, {}, u).value;
      worst = std::max({worst, rel_diff(closed, plane), rel_diff(numeric, plane)});
    }
    out.push_back(make_check("limits/bosshat-R-to-0", worst, 1e-5));
  }
  {
    const double a = 1.0;
    const double ratio = u_grounded_sphere_gap(1.0, a, 1e3 * a, u).value /
                         u_plane(DipoleVariances::isotropic(1.0), a, u).value;
    out.push_back(make_check("limits/sphere-R-to-inf", std::abs(ratio - 1.0), 3e-3));
  }
  {
    // U_isolated a^6 / R^3 -> -<d^2> / (4 pi eps0).
    const double a = 1.0, R = 1e-3;
    const double scaled = u_isolated_sphere_gap(1.0, a, R, u).value * std::pow(a, 6) / (R * R * R);
    const double target = -1.0 / u.four_pi_eps0();
    const double literature = -1.0 / (6.0 * std::numbers::pi * u.epsilon0());
    out.push_back(make_check("limits/isphere-point", std::abs(scaled / target - 1.0), 1e-2,
                             "ratio to the literature -<d^2>/(6 pi eps0) coefficient: " +
                                 std::to_string(scaled / literature)));
  }
  return out;
}

struct SpotPoint {
  GeometryConfig geometry;
  DipoleVariances variances;
  Position r0;
};

inline std::vector<SpotPoint> spot_points() {
  const auto cyl = [](double a, double b, double c) {
    return DipoleVariances(Frame::cylindrical_local, a, b, c);
  };
  return {
      {GeometryConfig::plane(), DipoleVariances(Frame::cartesian, 0.2, 0.3, 0.5), {0, 0, 1}},
      {GeometryConfig::plane(), DipoleVariances::isotropic(1.0), {0.3, -0.2, 2.5}},
      {GeometryConfig::grounded_sphere(1.0), DipoleVariances::isotropic(1.0), {0, 0, 2}},
      {GeometryConfig::grounded_sphere(1.0), DipoleVariances::isotropic(1.0), {0.6, 0.8, 0.5}},
      {GeometryConfig::isolated_sphere(1.0), DipoleVariances::isotropic(1.0), {0, 0, 1.5}},
      {GeometryConfig::isolated_sphere(2.0), DipoleVariances::isotropic(1.0), {1.0, 2.0, 2.0}},
      {GeometryConfig::boss_hat(1.0), cyl(0.2, 0.3, 0.5), {0, 0, 1.5}},
      {GeometryConfig::boss_hat(1.0), cyl(0.2, 0.3, 0.5), {0.7, 0.0, 0.9}},
      {GeometryConfig::boss_hat(1.0), cyl(0.4, 0.1, 0.5), from_cylindrical(1.5, 0.8, 0.4)},
  };
}

/// Closed form for any spot point (isotropic spheres are evaluated at |r0|).
inline EnergyResult closed_energy(const SpotPoint &p, const UnitSystem &u) {
  const auto c = to_cylindrical(p.r0);
  switch (p.geometry.kind) {
  case GeometryKind::Plane: return u_plane(p.variances, p.r0.z, u);
  case GeometryKind::GroundedSphere:
    return u_grounded_sphere(p.variances.total(), norm(p.r0), p.geometry.radius, u);
  case GeometryKind::IsolatedSphere:
    return u_isolated_sphere(p.variances.total(), norm(p.r0), p.geometry.radius, u);
  case GeometryKind::BossHat:
    return u_bosshat_from_images(p.variances, c.rho, c.z, p.geometry.radius, u);
  }
  return {};
}

/// Closed form, numeric Green-function derivative and finite-dipole oracle
/// agree pairwise.
inline std::vector<CheckResult> check_threeway(double tol = 1e-5) {
  std::vector<CheckResult> out;
  const UnitSystem u = UnitSystem::reduced();
  for (const auto &p : spot_points()) {
    const AtomSpec atom(p.variances);
    const double c = closed_energy(p, u).value;
    const double n = energy_numeric(p.geometry, atom, p.r0, {}, u).value;
    const double o = extrapolated_energy(p.geometry, atom, p.r0, {}, u).value;
    const double worst = std::max({rel_diff(c, n), rel_diff(c, o), rel_diff(n, o)});
    char label[128];
    std::snprintf(label, sizeof label, "threeway/%s@(%.3g,%.3g,%.3g)",
                  std::string(to_string(p.geometry.kind)).c_str(), p.r0.x, p.r0.y, p.r0.z);
    out.push_back(make_check(label, worst, tol));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Near-contact series
// ---------------------------------------------------------------------------

/// U / [-<d^2> / (48 pi eps0 a^3)] for the grounded sphere at s = a/R.
inline double sphere_series_ratio(double s) {
  const double R = 1.0;
  const double a = s * R;
  const UnitSystem u = UnitSystem::reduced();
  const double lead = -1.0 / (48.0 * std::numbers::pi * u.epsilon0() * a * a * a);
  return u_grounded_sphere(1.0, R + a, R, u).value / lead;
}

/// Same ratio for an isotropic atom on the boss-hat axis.
inline double bosshat_series_ratio(double s) {
  const double R = 1.0;
  const double a = s * R;
  const UnitSystem u = UnitSystem::reduced();
  const double lead = -1.0 / (48.0 * std::numbers::pi * u.epsilon0() * a * a * a);
  const auto iso = DipoleVariances::isotropic(1.0, Frame::cylindrical_local);
  return u_bosshat(iso, 0.0, R + a, R, u).value / lead;
}

struct SeriesFit {
  std::vector<double> sphere;
  std::vector<double> bosshat;
};

inline SeriesFit fit_near_contact_series() {
  return {fit_series(sphere_series_ratio, 1e-3, 0.2, 9),
          fit_series(bosshat_series_ratio, 1e-3, 0.2, 9)};
}

inline std::vector<CheckResult> check_expansion() {
  std::vector<CheckResult> out;
  const auto fit = fit_near_contact_series();
  const double lower[3] = {1.0, -1.0, 1.0};
  double worst = 0.0;
  for (int k = 0; k < 3; ++k)
    worst = std::max({worst, std::abs(fit.sphere[k] - lower[k]), std::abs(fit.bosshat[k] - lower[k])});
  out.push_back(make_check("expansion/orders-0-2", worst, 1e-3));
  char note[96];
  std::snprintf(note, sizeof note, "fitted c3 = %.6f", fit.sphere[3]);
  out.push_back(make_check("expansion/sphere-c3", std::abs(fit.sphere[3] - kSphereThirdOrder),
                           1e-3, note));
  std::snprintf(note, sizeof note, "fitted c3 = %.6f", fit.bosshat[3]);
  out.push_back(make_check("expansion/bosshat-c3", std::abs(fit.bosshat[3] - kBossHatThirdOrder),
                           1e-3, note));
  return out;
}

} // namespace vdw::validation
