// Copyright 2026 The vdw-images Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "vdw/core_types.hpp"

namespace vdw {

/// How an image charge's location follows the source point r'.
enum class ImagePlacement {
  Mirror,          ///< (x', y', -z')
  Inversion,       ///< (R^2/|r'|^2) r'
  InversionMirror, ///< (R^2/|r'|^2) (x', y', -z')
};

/// One image charge of a point source at r'. Its charge ratio q_i/q and its
/// location are both functions of r'.
struct ImageCharge {
  ImagePlacement placement = ImagePlacement::Mirror;
  double sign = -1.0;   ///< overall sign of the charge ratio
  double radius = 0.0;  ///< sphere radius for the inversion placements

  double weight(const Position &src) const noexcept {
    if (placement == ImagePlacement::Mirror)
      return sign;
    return sign * radius / norm(src);
  }

  Position location(const Position &src) const noexcept {
    switch (placement) {
    case ImagePlacement::Mirror: return {src.x, src.y, -src.z};
    case ImagePlacement::Inversion: {
      const double f = radius * radius / norm2(src);
      return f * src;
    }
    case ImagePlacement::InversionMirror: {
      const double f = radius * radius / norm2(src);
      return {f * src.x, f * src.y, -f * src.z};
    }
    }
    return src;
  }
};

/// Homogeneous part G_H of the Dirichlet Green function (units 1/length):
///
///   G_H(r, r') = (1/4pi) sum_k w_k(r') / |r - x_k(r')|  [+ R/(4pi |r||r'|)]
///
/// The bracketed supplement is present only for the isolated sphere.
struct HomogeneousGreen {
  GeometryConfig geometry;
  std::vector<ImageCharge> images;
  bool isolated_supplement = false;

  double operator()(const Position &r, const Position &src) const {
    double sum = 0.0;
    for (const auto &img : images) {
      const Position loc = img.location(src);
      const double d = distance(r, loc);
      const double scale = std::max(norm(r), norm(loc));
      if (!(d > 4.0 * std::numeric_limits<double>::epsilon() * scale))
        throw DegenerateSource("field point coincides with an image charge");
      sum += img.weight(src) / d;
    }
    if (isolated_supplement)
      sum += geometry.radius / (norm(r) * norm(src));
    return sum / (4.0 * std::numbers::pi);
  }
};

inline HomogeneousGreen build_green(const GeometryConfig &g) {
  HomogeneousGreen green{g, {}, false};
  const double R = g.radius;
  switch (g.kind) {
  case GeometryKind::Plane:
    green.images.push_back({ImagePlacement::Mirror, -1.0, 0.0});
    break;
  case GeometryKind::GroundedSphere:
    green.images.push_back({ImagePlacement::Inversion, -1.0, R});
    break;
  case GeometryKind::IsolatedSphere:
    green.images.push_back({ImagePlacement::Inversion, -1.0, R});
    green.isolated_supplement = true;
    break;
  case GeometryKind::BossHat:
    green.images.push_back({ImagePlacement::Inversion, -1.0, R});
    green.images.push_back({ImagePlacement::InversionMirror, +1.0, R});
    green.images.push_back({ImagePlacement::Mirror, -1.0, 0.0});
    break;
  }
  return green;
}

inline double g_h(const HomogeneousGreen &green, const Position &r, const Position &src) {
  return green(r, src);
}

/// Free-space part 1/(4pi|r - r'|).
inline double g_free(const Position &r, const Position &src) noexcept {
  return 1.0 / (4.0 * std::numbers::pi * distance(r, src));
}

// ---------------------------------------------------------------------------
// Boss-hat distances in cylindrical form
// ---------------------------------------------------------------------------

/// The three cylindrical-coordinate radicals of the boss-hat construction.
/// `plane` is |r - mirror(r')|; `minus` and `plus` equal |r'|^2 times the
/// distance from r to the same-side and mirrored sphere images.
struct BossHatRadicals {
  double plane = 0.0;
  double minus = 0.0;
  double plus = 0.0;
};

inline BossHatRadicals bosshat_radicals(const Position &r, const Position &src, double R) noexcept {
  const auto [rho, phi, z] = to_cylindrical(r);
  const auto [rp, php, zp] = to_cylindrical(src);
  const double c = std::cos(php - phi);
  const double s2 = rp * rp + zp * zp;
  const double R2 = R * R;
  const double base = R2 * R2 * rp * rp + s2 * s2 * rho * rho - 2.0 * R2 * s2 * rp * rho * c;
  const double zm = s2 * z - R2 * zp;
  const double zpl = s2 * z + R2 * zp;
  return {std::sqrt(rp * rp + rho * rho + (zp + z) * (zp + z) - 2.0 * rp * rho * c),
          std::sqrt(base + zm * zm), std::sqrt(base + zpl * zpl)};
}

/// Boss-hat G_H assembled from the cylindrical radicals (verification path
/// for the Cartesian image evaluation).
inline double bosshat_g_h_cylindrical(const Position &r, const Position &src, double R) noexcept {
  const auto xi = bosshat_radicals(r, src, R);
  const double k = R * norm(src);
  return (-1.0 / xi.plane - k / xi.minus + k / xi.plus) / (4.0 * std::numbers::pi);
}

// ---------------------------------------------------------------------------
// Boundary-condition checks
// ---------------------------------------------------------------------------

inline bool on_surface(const GeometryConfig &g, const Position &p, double rel_tol = 1e-9) noexcept {
  const double r = norm(p);
  const double tol = rel_tol * std::max(r, g.radius);
  switch (g.kind) {
  case GeometryKind::Plane: return std::abs(p.z) <= tol;
  case GeometryKind::GroundedSphere:
  case GeometryKind::IsolatedSphere: return std::abs(r - g.radius) <= tol;
  case GeometryKind::BossHat: {
    const bool flat = std::abs(p.z) <= tol && to_cylindrical(p).rho >= g.radius - tol;
    const bool dome = std::abs(r - g.radius) <= tol && p.z >= -tol;
    return flat || dome;
  }
  }
  return false;
}

/// Boundary residual of the full Green function at a surface point.
///
/// Grounded geometries: 1/(4pi|r_s - r'|) + G_H(r_s, r'), which vanishes.
/// Isolated sphere: max-norm of grad' G(r_s, r') + r'/(4pi|r'|^3), the
/// constant-potential condition obeyed by the neutral sphere's G; the
/// gradient is taken by central differences in r'.
inline double bc_residual(const HomogeneousGreen &green, const Position &r_surface,
                          const Position &src) {
  const auto &g = green.geometry;
  if (!on_surface(g, r_surface))
    throw InvalidArgument("bc_residual: point is not on the conductor");
  if (!physical_region(g, src))
    throw RegionError("bc_residual: source outside the physical region");

  if (g.kind != GeometryKind::IsolatedSphere)
    return g_free(r_surface, src) + green(r_surface, src);

  const auto full = [&](const Position &s) { return g_free(r_surface, s) + green(r_surface, s); };
  const double step = 1e-5 * norm(src);
  const double inv = 1.0 / (4.0 * std::numbers::pi * std::pow(norm(src), 3));
  double worst = 0.0;
  for (const Vec3 e : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) {
    const double grad = (full(src + step * e) - full(src - step * e)) / (2.0 * step);
    worst = std::max(worst, std::abs(grad + dot(src, e) * inv));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Surface sampling
// ---------------------------------------------------------------------------

/// `n` deterministic pseudo-random points on the conductor. Unbounded flat
/// parts are truncated at cylindrical radius `outer_radius` (default
/// 10*max(R, 1)).
inline std::vector<Position> surface_sample(const GeometryConfig &g, std::size_t n,
                                            std::uint64_t seed, double outer_radius = 0.0) {
  if (n == 0)
    throw InvalidArgument("surface_sample: n must be at least 1");
  const double R = g.radius;
  const double outer = outer_radius > 0.0 ? outer_radius : 10.0 * std::max(R, 1.0);
  if (g.kind == GeometryKind::BossHat && !(outer > R))
    throw InvalidArgument("surface_sample: outer radius must exceed R");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const auto on_sphere = [&] {
    Vec3 v;
    double len = 0.0;
    while (!(len > 1e-12)) {
      v = {gauss(rng), gauss(rng), gauss(rng)};
      len = norm(v);
    }
    return (R / len) * v;
  };

  std::vector<Position> out;
  out.reserve(n);
  switch (g.kind) {
  case GeometryKind::Plane:
    for (std::size_t i = 0; i < n; ++i) {
      const double rho = outer * std::sqrt(uni(rng));
      out.push_back(from_cylindrical(rho, 2.0 * std::numbers::pi * uni(rng), 0.0));
    }
    break;
  case GeometryKind::GroundedSphere:
  case GeometryKind::IsolatedSphere:
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(on_sphere());
    break;
  case GeometryKind::BossHat: {
    const std::size_t dome = (n + 1) / 2;
    for (std::size_t i = 0; i < dome; ++i) {
      Position p = on_sphere();
      p.z = std::abs(p.z);
      out.push_back(p);
    }
    for (std::size_t i = dome; i < n; ++i) {
      const double rho = std::sqrt(R * R + uni(rng) * (outer * outer - R * R));
      out.push_back(from_cylindrical(rho, 2.0 * std::numbers::pi * uni(rng), 0.0));
    }
    break;
  }
  }
  return out;
}

} // namespace vdw
