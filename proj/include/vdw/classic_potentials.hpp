// Copyright 2026 The vdw-images Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vdw/core_types.hpp"

// Historical pair potentials between two molecules or atoms. The induction
// (Debye) energy between a permanent and an induced dipole is not provided:
// only its -alpha p^2 / ((4 pi eps0)^2 r^6) scaling is established without a
// full derivation of the prefactor.

namespace vdw::classic {

struct PairSpec {
  double p1 = 0.0;     ///< permanent dipole magnitudes
  double p2 = 0.0;
  double alpha1 = 0.0; ///< static polarizabilities
  double alpha2 = 0.0;
  double omega0 = 0.0; ///< dominant transition angular frequency
  double temperature = 0.0;

  void validate() const {
    if (p1 < 0 || p2 < 0 || alpha1 < 0 || alpha2 < 0 || omega0 < 0 || temperature < 0)
      throw InvalidArgument("pair magnitudes must be non-negative");
  }
};

/// Energy with a note when the formula is used outside its stated regime.
struct Annotated {
  double value = 0.0;
  bool regime_valid = true;
  std::string warning;
};

namespace detail {
inline void require_positive_distance(double r) {
  if (!(r > 0.0))
    throw InvalidArgument("separation must be positive");
}
} // namespace detail

/// Keesom orientation energy, -2 p1^2 p2^2 / (3 k_B T (4 pi eps0)^2 r^6).
/// Valid for k_B T >> p1 p2 / (4 pi eps0 r^3); outside that regime the value
/// is still returned with a warning.
inline Annotated u_orientation(double p1, double p2, double T, double r, const UnitSystem &u = {}) {
  detail::require_positive_distance(r);
  if (!(T > 0.0))
    throw InvalidArgument("temperature must be positive");
  const double k = u.four_pi_eps0();
  const double kT = u.boltzmann() * T;
  Annotated out;
  out.value = -2.0 * p1 * p1 * p2 * p2 / (3.0 * kT * k * k * std::pow(r, 6));
  const double coupling = p1 * p2 / (k * r * r * r);
  if (!(kT > 10.0 * coupling)) {
    out.regime_valid = false;
    out.warning = "k_B T is not large compared with the dipole coupling";
  }
  return out;
}

inline Annotated u_orientation(const PairSpec &pair, double r, const UnitSystem &u = {}) {
  pair.validate();
  return u_orientation(pair.p1, pair.p2, pair.temperature, r, u);
}

/// London dispersion energy for identical atoms, -(3/4) hbar omega0 alpha0^2 / ((4 pi eps0)^2 r^6).
inline double u_london(double alpha0, double omega0, double r, const UnitSystem &u = {}) {
  detail::require_positive_distance(r);
  const double k = u.four_pi_eps0();
  return -0.75 * u.hbar() * omega0 * alpha0 * alpha0 / (k * k * std::pow(r, 6));
}

/// London energy for two different species,
/// -(3/2) hbar [w1 w2/(w1 + w2)] alpha1 alpha2 / ((4 pi eps0)^2 r^6).
/// An infinite omega2 describes a static (e.g. conducting) polarizable body.
inline double u_london_pair(double alpha1, double omega1, double alpha2, double omega2, double r,
                            const UnitSystem &u = {}) {
  detail::require_positive_distance(r);
  const double k = u.four_pi_eps0();
  double reduced;
  if (std::isinf(omega2))
    reduced = omega1;
  else if (std::isinf(omega1))
    reduced = omega2;
  else
    reduced = omega1 * omega2 / (omega1 + omega2);
  return -1.5 * u.hbar() * reduced * alpha1 * alpha2 / (k * k * std::pow(r, 6));
}

/// Wang's hydrogen-hydrogen estimate, -8.7 e^2 a0^2 / ((4 pi eps0)^2 r^6).
inline Annotated u_wang(double r, const UnitSystem &u = {}) {
  detail::require_positive_distance(r);
  const double k = u.four_pi_eps0();
  const double e = u.elementary_charge();
  const double a0 = u.bohr_radius();
  Annotated out;
  out.value = -8.7 * e * e * a0 * a0 / (k * k * std::pow(r, 6));
  if (!(r > 5.0 * a0)) {
    out.regime_valid = false;
    out.warning = "separation is not large compared with the Bohr radius";
  }
  return out;
}

/// Retarded Casimir-Polder energy, -23 hbar c alpha1 alpha2 / (4 pi (4 pi eps0)^2 r^7).
inline double u_retarded_cp(double alpha1, double alpha2, double r, const UnitSystem &u = {}) {
  detail::require_positive_distance(r);
  const double k = u.four_pi_eps0();
  return -23.0 * u.hbar() * u.speed_of_light() * alpha1 * alpha2 /
         (4.0 * std::numbers::pi * k * k * std::pow(r, 7));
}

/// Dipole-dipole interaction [p1.p2 - 3 (p1.n)(p2.n)] / (4 pi eps0 R^3).
inline double h_dipole_dipole(const Vec3 &p1, const Vec3 &p2, const Vec3 &separation,
                              const UnitSystem &u = {}) {
  const double R = norm(separation);
  if (!(R > 0.0))
    throw InvalidArgument("h_dipole_dipole: zero separation");
  const Vec3 n = (1.0 / R) * separation;
  return (dot(p1, p2) - 3.0 * dot(p1, n) * dot(p2, n)) / (u.four_pi_eps0() * R * R * R);
}

} // namespace vdw::classic
