// Copyright 2026 The vdw-images Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vdw {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (negative variance, non-positive radius, bad settings).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Evaluation point lies outside the physical region or touches the conductor.
class RegionError : public Error {
public:
  using Error::Error;
};

/// Field point coincides with an image charge.
class DegenerateSource : public Error {
public:
  using Error::Error;
};

/// Finite-difference step fell below the round-off floor.
class StepUnderflow : public Error {
public:
  using Error::Error;
};

/// Argument outside the validity window of a series expansion.
class OutOfWindow : public Error {
public:
  using Error::Error;
};

/// Extrapolated sequence did not settle within tolerance.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Vectors and positions
// ---------------------------------------------------------------------------

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 &operator+=(const Vec3 &o) noexcept {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3 &operator-=(const Vec3 &o) noexcept {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3 &operator*=(double s) noexcept {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3 &b) noexcept { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3 &b) noexcept { return a -= b; }
  friend constexpr Vec3 operator*(Vec3 a, double s) noexcept { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) noexcept { return a *= s; }
  friend constexpr Vec3 operator-(const Vec3 &a) noexcept { return {-a.x, -a.y, -a.z}; }
  friend constexpr bool operator==(const Vec3 &, const Vec3 &) = default;
};

constexpr double dot(const Vec3 &a, const Vec3 &b) noexcept {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline double norm(const Vec3 &a) noexcept { return std::hypot(a.x, a.y, a.z); }
constexpr double norm2(const Vec3 &a) noexcept { return dot(a, a); }
inline double distance(const Vec3 &a, const Vec3 &b) noexcept { return norm(a - b); }

/// Point in space. Stored Cartesian; cylindrical coordinates are a view.
using Position = Vec3;

struct Cylindrical {
  double rho = 0.0;
  double phi = 0.0; ///< in (-pi, pi]; 0 on the z axis
  double z = 0.0;
};

inline Cylindrical to_cylindrical(const Position &p) noexcept {
  const double rho = std::hypot(p.x, p.y);
  const double phi = rho == 0.0 ? 0.0 : std::atan2(p.y, p.x);
  return {rho, phi, p.z};
}

inline Position from_cylindrical(double rho, double phi, double z) noexcept {
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}
inline Position from_cylindrical(const Cylindrical &c) noexcept {
  return from_cylindrical(c.rho, c.phi, c.z);
}

/// Orthonormal triad (rho-hat, phi-hat, z-hat) at azimuth phi.
inline std::array<Vec3, 3> cylindrical_frame(double phi) noexcept {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {Vec3{c, s, 0.0}, Vec3{-s, c, 0.0}, Vec3{0.0, 0.0, 1.0}};
}

// ---------------------------------------------------------------------------
// Units
// ---------------------------------------------------------------------------

enum class UnitMode { SI, reduced };

/// Physical constants for the chosen unit convention.
///
/// SI uses CODATA 2018. Reduced units set 4*pi*eps0 = 1 and take hbar, k_B, c,
/// the elementary charge and the Bohr radius as 1; lengths and dipoles are
/// then dimensionless.
struct UnitSystem {
  UnitMode mode = UnitMode::reduced;

  static constexpr UnitSystem si() noexcept { return {UnitMode::SI}; }
  static constexpr UnitSystem reduced() noexcept { return {UnitMode::reduced}; }

  constexpr double epsilon0() const noexcept {
    return mode == UnitMode::SI ? 8.8541878128e-12 : 1.0 / (4.0 * std::numbers::pi);
  }
  constexpr double four_pi_eps0() const noexcept {
    return mode == UnitMode::SI ? 4.0 * std::numbers::pi * 8.8541878128e-12 : 1.0;
  }
  constexpr double hbar() const noexcept {
    return mode == UnitMode::SI ? 1.054571817e-34 : 1.0;
  }
  constexpr double boltzmann() const noexcept {
    return mode == UnitMode::SI ? 1.380649e-23 : 1.0;
  }
  constexpr double speed_of_light() const noexcept {
    return mode == UnitMode::SI ? 299792458.0 : 1.0;
  }
  constexpr double elementary_charge() const noexcept {
    return mode == UnitMode::SI ? 1.602176634e-19 : 1.0;
  }
  constexpr double bohr_radius() const noexcept {
    return mode == UnitMode::SI ? 5.29177210903e-11 : 1.0;
  }

  friend constexpr bool operator==(const UnitSystem &, const UnitSystem &) = default;
};

inline std::string_view to_string(UnitMode m) noexcept {
  return m == UnitMode::SI ? "si" : "reduced";
}

// ---------------------------------------------------------------------------
// Atom description
// ---------------------------------------------------------------------------

enum class Frame { cartesian, cylindrical_local };

/// Diagonal ground-state dipole fluctuations <d_m^2>.
///
/// In the cartesian frame (m1, m2, m3) = (<d_x^2>, <d_y^2>, <d_z^2>); in the
/// cylindrical_local frame they are (<d_rho^2>, <d_phi^2>, <d_z^2>) measured
/// along the local triad at the atom's azimuth.
struct DipoleVariances {
  Frame frame = Frame::cartesian;
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;

  DipoleVariances() = default;
  DipoleVariances(Frame f, double a, double b, double c) : frame(f), m1(a), m2(b), m3(c) {
    if (!(a >= 0.0) || !(b >= 0.0) || !(c >= 0.0))
      throw InvalidArgument("dipole variances must be non-negative");
  }

  static DipoleVariances isotropic(double total, Frame f = Frame::cartesian) {
    return {f, total / 3.0, total / 3.0, total / 3.0};
  }

  double total() const noexcept { return m1 + m2 + m3; }
  std::array<double, 3> components() const noexcept { return {m1, m2, m3}; }
  bool is_isotropic() const noexcept { return m1 == m2 && m2 == m3; }
};

/// Unit vectors along which the variances are measured, for an atom at r0.
inline std::array<Vec3, 3> variance_axes(const DipoleVariances &v, const Position &r0) noexcept {
  if (v.frame == Frame::cylindrical_local)
    return cylindrical_frame(to_cylindrical(r0).phi);
  return {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
}

struct DominantTransition {
  double alpha = 0.0;   ///< static polarizability
  double omega10 = 0.0; ///< transition angular frequency
};

struct AtomSpec {
  DipoleVariances variances;
  std::optional<DominantTransition> transition;

  AtomSpec() = default;
  explicit AtomSpec(DipoleVariances v) : variances(v) {}

  /// Isotropic atom with <d^2> = (3/2) hbar omega10 alpha.
  static AtomSpec from_transition(double alpha, double omega10, const UnitSystem &u,
                                  Frame f = Frame::cartesian) {
    if (!(alpha >= 0.0) || !(omega10 >= 0.0))
      throw InvalidArgument("polarizability and frequency must be non-negative");
    AtomSpec a(DipoleVariances::isotropic(1.5 * u.hbar() * omega10 * alpha, f));
    a.transition = DominantTransition{alpha, omega10};
    return a;
  }
};

// ---------------------------------------------------------------------------
// Geometry
// ---------------------------------------------------------------------------

enum class GeometryKind { Plane, GroundedSphere, IsolatedSphere, BossHat };

struct GeometryConfig {
  GeometryKind kind = GeometryKind::Plane;
  double radius = 0.0; ///< unused for Plane

  static GeometryConfig plane() noexcept { return {GeometryKind::Plane, 0.0}; }
  static GeometryConfig grounded_sphere(double R) { return make(GeometryKind::GroundedSphere, R); }
  static GeometryConfig isolated_sphere(double R) { return make(GeometryKind::IsolatedSphere, R); }
  static GeometryConfig boss_hat(double R) { return make(GeometryKind::BossHat, R); }

  static GeometryConfig make(GeometryKind k, double R) {
    if (k != GeometryKind::Plane && !(R > 0.0))
      throw InvalidArgument("radius must be positive");
    return {k, k == GeometryKind::Plane ? 0.0 : R};
  }

  bool has_radius() const noexcept { return kind != GeometryKind::Plane; }
};

inline std::string_view to_string(GeometryKind k) noexcept {
  switch (k) {
  case GeometryKind::Plane: return "plane";
  case GeometryKind::GroundedSphere: return "gsphere";
  case GeometryKind::IsolatedSphere: return "isphere";
  case GeometryKind::BossHat: return "bosshat";
  }
  return "?";
}

inline bool physical_region(const GeometryConfig &g, const Position &p) noexcept {
  switch (g.kind) {
  case GeometryKind::Plane: return p.z > 0.0;
  case GeometryKind::GroundedSphere:
  case GeometryKind::IsolatedSphere: return norm(p) > g.radius;
  case GeometryKind::BossHat: return p.z > 0.0 && norm(p) > g.radius;
  }
  return false;
}

/// Lower bound on the distance from p to the conductor (negative outside the
/// physical region).
inline double distance_to_surface(const GeometryConfig &g, const Position &p) noexcept {
  switch (g.kind) {
  case GeometryKind::Plane: return p.z;
  case GeometryKind::GroundedSphere:
  case GeometryKind::IsolatedSphere: return norm(p) - g.radius;
  case GeometryKind::BossHat: return std::min(p.z, norm(p) - g.radius);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

enum class Method { closed_form, numeric_ez, oracle };

inline std::string_view to_string(Method m) noexcept {
  switch (m) {
  case Method::closed_form: return "closed_form";
  case Method::numeric_ez: return "numeric_ez";
  case Method::oracle: return "oracle";
  }
  return "?";
}

struct EnergyResult {
  double value = 0.0;
  Method method = Method::closed_form;
  double err_estimate = 0.0; ///< absolute; 0 for closed forms
  UnitMode units = UnitMode::reduced;
};

} // namespace vdw
