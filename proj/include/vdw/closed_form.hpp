// Copyright 2026 The vdw-images Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>

#include "vdw/core_types.hpp"

namespace vdw {

namespace detail {

inline EnergyResult closed(double value, const UnitSystem &u) noexcept {
  return {value, Method::closed_form, 0.0, u.mode};
}

inline void require_sphere_outside(double z0, double R) {
  if (!(R > 0.0))
    throw InvalidArgument("sphere radius must be positive");
  if (!(z0 > R))
    throw RegionError("atom touches or is inside the sphere");
}

inline void require_gap(double a, double R) {
  if (!(R > 0.0))
    throw InvalidArgument("sphere radius must be positive");
  if (!(a > 0.0))
    throw RegionError("atom-surface gap must be positive");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Plane
// ---------------------------------------------------------------------------

/// U = -(<d_1^2> + <d_2^2> + 2<d_z^2>) / (64 pi eps0 |z0|^3).
/// The first two components are the in-plane ones in either frame.
inline EnergyResult u_plane(const DipoleVariances &v, double z0, const UnitSystem &u = {}) {
  if (z0 == 0.0 || !std::isfinite(z0))
    throw RegionError("u_plane: zero distance");
  const double a = std::abs(z0);
  return detail::closed(-(v.m1 + v.m2 + 2.0 * v.m3) /
                            (64.0 * std::numbers::pi * u.epsilon0() * a * a * a),
                        u);
}

// ---------------------------------------------------------------------------
// Spheres (isotropic atom on the axis through the centre)
// ---------------------------------------------------------------------------

inline EnergyResult u_grounded_sphere(double variance_total, double z0, double R,
                                      const UnitSystem &u = {}) {
  detail::require_sphere_outside(z0, R);
  const double x = 1.0 - R * R / (z0 * z0);
  const double z2 = z0 * z0;
  const double brace = 4.0 * R * R * R / (z2 * z2 * z2) / (x * x * x) + R / (z2 * z2) / (x * x);
  return detail::closed(-variance_total / (24.0 * std::numbers::pi * u.epsilon0()) * brace, u);
}

/// Same energy written with the gap a = z0 - R.
inline EnergyResult u_grounded_sphere_gap(double variance_total, double a, double R,
                                          const UnitSystem &u = {}) {
  detail::require_gap(a, R);
  const double t = a / R;
  const double brace = 4.0 / std::pow(2.0 + t, 3) + t / ((2.0 + t) * (2.0 + t));
  return detail::closed(-variance_total / (24.0 * std::numbers::pi * u.epsilon0() * a * a * a) *
                            brace,
                        u);
}

/// Dominant-transition form: <d^2> = (3/2) hbar omega10 alpha.
inline EnergyResult u_grounded_sphere_alpha(double alpha, double omega10, double a, double R,
                                            const UnitSystem &u = {}) {
  detail::require_gap(a, R);
  const double t = a / R;
  const double brace = 4.0 / std::pow(2.0 + t, 3) + t / ((2.0 + t) * (2.0 + t));
  return detail::closed(-u.hbar() * omega10 * alpha /
                            (16.0 * std::numbers::pi * u.epsilon0() * a * a * a) * brace,
                        u);
}

/// Neutral isolated sphere: the grounded brace minus R/z0^4.
inline EnergyResult u_isolated_sphere(double variance_total, double z0, double R,
                                      const UnitSystem &u = {}) {
  detail::require_sphere_outside(z0, R);
  const double x = 1.0 - R * R / (z0 * z0);
  const double z2 = z0 * z0;
  const double brace = 4.0 * R * R * R / (z2 * z2 * z2) / (x * x * x) + R / (z2 * z2) / (x * x) -
                       R / (z2 * z2);
  return detail::closed(-variance_total / (24.0 * std::numbers::pi * u.epsilon0()) * brace, u);
}

inline EnergyResult u_isolated_sphere_gap(double variance_total, double a, double R,
                                          const UnitSystem &u = {}) {
  detail::require_gap(a, R);
  const double t = a / R;
  const double brace = 4.0 / std::pow(2.0 + t, 3) + t / ((2.0 + t) * (2.0 + t)) -
                       t * t * t / std::pow(1.0 + t, 4);
  return detail::closed(-variance_total / (24.0 * std::numbers::pi * u.epsilon0() * a * a * a) *
                            brace,
                        u);
}

/// Small-sphere limit of the isolated-sphere energy,
/// U -> -<d^2> R^3 / (4 pi eps0 a^6), written with alpha_s = 4 pi eps0 R^3 and
/// <d^2> = (3/2) hbar omega10 alpha.
inline EnergyResult u_point_conductor(double alpha, double omega10, double alpha_s, double a,
                                      const UnitSystem &u = {}) {
  if (!(a > 0.0))
    throw RegionError("u_point_conductor: distance must be positive");
  const double k = u.four_pi_eps0();
  return detail::closed(-1.5 * u.hbar() * omega10 * alpha * alpha_s / (k * k * std::pow(a, 6)), u);
}

// ---------------------------------------------------------------------------
// Boss hat: hemisphere of radius R on an infinite plane
// ---------------------------------------------------------------------------

/// Dimensionless per-axis factors of the boss-hat energy,
/// U = -(<d_rho^2> Xi_rho + <d_phi^2> Xi_phi + <d_z^2> Xi_z) / (64 pi eps0 z0^3).
struct BossHatXi {
  double xi_rho = 1.0;
  double xi_phi = 1.0;
  double xi_z = 2.0;
  double zeta = 0.0; ///< auxiliary polynomial entering Xi_z (length^12)
};

namespace detail {

inline void require_bosshat_region(double R, double rho0, double z0) {
  if (!(R >= 0.0))
    throw InvalidArgument("boss hat radius must be non-negative");
  if (!(rho0 >= 0.0))
    throw InvalidArgument("rho0 must be non-negative");
  if (!(z0 > 0.0) || !(rho0 * rho0 + z0 * z0 > R * R))
    throw RegionError("atom outside the boss-hat physical region");
}

} // namespace detail

/// The Xi factors and zeta in their literature form.
///
/// Xi_phi is exact everywhere. Xi_rho and Xi_z agree with the image
/// construction only on the axis (rho0 = 0); off axis use
/// xi_functions_from_images.
inline BossHatXi xi_functions(double R, double rho0, double z0) {
  detail::require_bosshat_region(R, rho0, z0);
  const double R2 = R * R, r2 = rho0 * rho0, z2 = z0 * z0;
  const double R4 = R2 * R2, r4 = r2 * r2, z4 = z2 * z2;
  const double r6 = r4 * r2, z6 = z4 * z2, z8 = z4 * z4, R6 = R4 * R2;
  const double z3 = z2 * z0;

  const double D = (r2 + z2 + R2) * (r2 + z2 + R2) - 4.0 * R2 * r2;
  const double P = r2 + z2 - R2;
  const double P3 = P * P * P;

  BossHatXi xi;
  xi.xi_rho = 1.0 - 8.0 * R * z3 *
                        ((((R2 + z2) * (R2 + z2) + (R2 - r2 - 8.0 * z2) * r2) * R2 +
                          (z2 + r2) * (z2 + r2) * r2) /
                             std::pow(D, 2.5) -
                         (r2 + R2) / P3);
  xi.xi_phi = 1.0 + 8.0 * R2 * R * z3 * (1.0 / P3 - 1.0 / std::pow(D, 1.5));

  const double R4mz4 = R4 - z4;
  const double R2mz2 = R2 - z2;
  xi.zeta = -R2 * r2 *
                (-10.0 * r4 * z4 - 10.0 * r4 * R2 * z2 - 10.0 * R4 * r4 + 8.0 * r2 * R4 * z2 - z8 +
                 2.0 * r6 * z2 + 8.0 * r2 * z6 - 36.0 * r2 * R2 * z4 + 10.0 * r2 * R6) -
            R4mz4 * R4mz4 * R2mz2 * R2mz2 -
            5.0 * r2 * z4 * (z2 + r2) * ((z2 + r2) * (z2 + r2) - r2 * z2);
  xi.xi_z = 2.0 + 8.0 * R * z3 / P3 * (R2 + z2 + xi.zeta / std::pow(D, 2.5));
  return xi;
}

/// Xi factors derived from the three-image construction. Valid on and off
/// the axis; `zeta` is the value that makes the literature Xi_z expression
/// reproduce the exact Xi_z (0 when R = 0).
inline BossHatXi xi_functions_from_images(double R, double rho0, double z0) {
  detail::require_bosshat_region(R, rho0, z0);
  const double R2 = R * R, r2 = rho0 * rho0, z2 = z0 * z0;
  const double s2 = r2 + z2;
  const double z3 = z2 * z0;
  const double D = (s2 + R2) * (s2 + R2) - 4.0 * R2 * r2;
  const double P = s2 - R2;
  const double P3 = P * P * P;
  const double D52 = std::pow(D, 2.5);

  // Same-side sphere image: tangential R^3/P^3, with an extra R c^2 |r0|^2/P^3
  // along the radial direction. Mirrored sphere image: mixed derivatives of
  // R / sqrt(|a|^2|b|^2 - 2R^2 a.b + R^4) at a = mirror(r0), b = r0.
  BossHatXi xi;
  xi.xi_rho = 1.0 + 8.0 * R * z3 * (R2 + r2) / P3 -
              8.0 * R * z3 * (3.0 * r2 * P * P - (2.0 * r2 - R2) * D) / D52;
  xi.xi_phi = 1.0 + 8.0 * R2 * R * z3 * (1.0 / P3 - 1.0 / std::pow(D, 1.5));
  xi.xi_z = 2.0 + 8.0 * R * z3 * (R2 + z2) / P3 -
            8.0 * R * z3 * (3.0 * z2 * (s2 + R2) * (s2 + R2) - (2.0 * z2 + R2) * D) / D52;
  xi.zeta = R > 0.0 ? ((xi.xi_z - 2.0) * P3 / (8.0 * R * z3) - (R2 + z2)) * D52 : 0.0;
  return xi;
}

namespace detail {

inline EnergyResult bosshat_energy(const BossHatXi &xi, const DipoleVariances &v, double z0,
                                   const UnitSystem &u) {
  const double sum = v.m1 * xi.xi_rho + v.m2 * xi.xi_phi + v.m3 * xi.xi_z;
  return closed(-sum / (64.0 * std::numbers::pi * u.epsilon0() * z0 * z0 * z0), u);
}

inline void require_local_frame(const DipoleVariances &v) {
  if (v.frame != Frame::cylindrical_local)
    throw InvalidArgument("boss-hat closed form expects cylindrical_local variances");
}

} // namespace detail

/// Boss-hat energy with the literature Xi factors (see xi_functions).
inline EnergyResult u_bosshat(const DipoleVariances &v, double rho0, double z0, double R,
                              const UnitSystem &u = {}) {
  detail::require_local_frame(v);
  return detail::bosshat_energy(xi_functions(R, rho0, z0), v, z0, u);
}

/// Boss-hat energy with Xi factors from the image construction.
inline EnergyResult u_bosshat_from_images(const DipoleVariances &v, double rho0, double z0,
                                          double R, const UnitSystem &u = {}) {
  detail::require_local_frame(v);
  return detail::bosshat_energy(xi_functions_from_images(R, rho0, z0), v, z0, u);
}

// ---------------------------------------------------------------------------
// Near-contact expansions in s = (z0 - R)/R
// ---------------------------------------------------------------------------

/// Third-order coefficient of the grounded-sphere expansion.
inline constexpr double kSphereThirdOrder = -7.0 / 8.0;
/// Third-order coefficient of the on-axis isotropic boss-hat expansion.
inline constexpr double kBossHatThirdOrder = -3.0 / 8.0;
/// Upper end of the s window accepted by the expansions.
inline constexpr double kExpansionWindow = 0.5;

/// -<d^2> / (48 pi eps0 (z0 - R)^3) * (1 - s + s^2 + c3 s^3)
inline EnergyResult expansion3(double variance_total, double z0, double R, double c3,
                               const UnitSystem &u = {}) {
  if (!(R > 0.0))
    throw InvalidArgument("radius must be positive");
  const double a = z0 - R;
  const double s = a / R;
  if (!(s > 0.0 && s < kExpansionWindow))
    throw OutOfWindow("expansion requires 0 < (z0 - R)/R < 0.5");
  const double series = 1.0 - s + s * s + c3 * s * s * s;
  return detail::closed(-variance_total / (48.0 * std::numbers::pi * u.epsilon0() * a * a * a) *
                            series,
                        u);
}

inline EnergyResult u_sphere_expansion3(double variance_total, double z0, double R,
                                        const UnitSystem &u = {}) {
  return expansion3(variance_total, z0, R, kSphereThirdOrder, u);
}

inline EnergyResult u_bosshat_expansion3(double variance_total, double z0, double R,
                                         const UnitSystem &u = {}) {
  return expansion3(variance_total, z0, R, kBossHatThirdOrder, u);
}

} // namespace vdw
