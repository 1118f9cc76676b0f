// Copyright 2026 The vdw-images Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "vdw/closed_form.hpp"
#include "vdw/ez_evaluator.hpp"

using namespace vdw;
constexpr double kPi = std::numbers::pi;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
} // namespace

TEST(MixedSecond, PlaneAxes) {
  const auto green = build_green(GeometryConfig::plane());
  EXPECT_LT(rel(mixed_second(green, {0, 0, 1}, Axis::x).value, -1.0 / (32 * kPi)), 1e-9);
  EXPECT_LT(rel(mixed_second(green, {0, 0, 1}, Axis::y).value, -1.0 / (32 * kPi)), 1e-9);
  EXPECT_LT(rel(mixed_second(green, {0, 0, 1}, Axis::z).value, -1.0 / (16 * kPi)), 1e-9);
}

TEST(MixedSecond, SphereTransverse) {
  const auto green = build_green(GeometryConfig::grounded_sphere(1));
  const auto d = mixed_second(green, {0, 0, 2}, Axis::x);
  EXPECT_LT(rel(d.value, -1.0 / (108 * kPi)), 1e-9);
  EXPECT_GE(d.err, 0.0);
  EXPECT_LT(d.err, 1e-8);
}

TEST(MixedSecond, RegionAndSettings) {
  const auto green = build_green(GeometryConfig::plane());
  EXPECT_THROW(mixed_second(green, {0, 0, -1}, Axis::z), RegionError);
  EXPECT_THROW(mixed_second(green, {0, 0, 1}, Axis::z, {0.2, 3}), InvalidArgument);
  EXPECT_THROW(mixed_second(green, {0, 0, 1}, Axis::z, {1e-2, 0}), InvalidArgument);
  EXPECT_THROW(mixed_second(green, {0, 0, 1}, Axis::z, {1e-2, 7}), InvalidArgument);
}

TEST(MixedSecond, StepUnderflow) {
  const auto green = build_green(GeometryConfig::grounded_sphere(1));
  EXPECT_THROW(mixed_second(green, {0, 0, 2}, Axis::z, {1e-12, 3}), StepUnderflow);
  EXPECT_THROW(mixed_second(green, {0, 0, 1.0 + 1e-13}, Axis::z), RegionError);
}

TEST(MixedSecond, RawStencilIsSecondOrder) {
  const auto green = build_green(GeometryConfig::grounded_sphere(1));
  const double exact = -1.0 / (108 * kPi);
  const double e1 = mixed_stencil(green, {0, 0, 2}, {1, 0, 0}, 0.04) - exact;
  const double e2 = mixed_stencil(green, {0, 0, 2}, {1, 0, 0}, 0.02) - exact;
  EXPECT_NEAR(e1 / e2, 4.0, 0.05);
}

TEST(EnergyNumeric, PlaneMatchesClosedForm) {
  for (double z0 : {0.1, 1.0, 37.0}) {
    const auto v = DipoleVariances::isotropic(1.0);
    const double num = energy_numeric(GeometryConfig::plane(), AtomSpec(v), {0, 0, z0}).value;
    EXPECT_LT(rel(num, u_plane(v, z0).value), 1e-8);
  }
}

TEST(EnergyNumeric, SphereMatchesClosedForm) {
  const double num =
      energy_numeric(GeometryConfig::grounded_sphere(1), AtomSpec(DipoleVariances::isotropic(1)),
                     {0, 0, 2})
          .value;
  EXPECT_LT(rel(num, u_grounded_sphere(1, 2, 1).value), 1e-8);
}

TEST(EnergyNumeric, BossHatOnAxis) {
  const auto v = DipoleVariances::isotropic(1, Frame::cylindrical_local);
  const double num = energy_numeric(GeometryConfig::boss_hat(1), AtomSpec(v), {0, 0, 1.5}).value;
  EXPECT_LT(rel(num, u_bosshat(v, 0, 1.5, 1).value), 1e-7);
}

TEST(EnergyNumeric, AzimuthIndependence) {
  const auto g = GeometryConfig::boss_hat(1);
  const DipoleVariances v(Frame::cylindrical_local, 0.2, 0.3, 0.5);
  const double ref = energy_numeric(g, AtomSpec(v), from_cylindrical(0.7, 0.0, 0.9)).value;
  for (double phi : {0.4, 1.9, -2.5})
    EXPECT_LT(rel(energy_numeric(g, AtomSpec(v), from_cylindrical(0.7, phi, 0.9)).value, ref),
              1e-8);
}

TEST(EnergyNumeric, AxisExchangeOnPlane) {
  const auto g = GeometryConfig::plane();
  const double a = energy_numeric(g, AtomSpec({Frame::cartesian, 1, 0, 0}), {0, 0, 2}).value;
  const double b = energy_numeric(g, AtomSpec({Frame::cartesian, 0, 1, 0}), {0, 0, 2}).value;
  EXPECT_LT(rel(a, b), 1e-10);
}

TEST(EnergyNumeric, UnitsScaleWithEpsilon) {
  const auto g = GeometryConfig::grounded_sphere(1);
  const AtomSpec atom(DipoleVariances::isotropic(1));
  const double red = energy_numeric(g, atom, {0, 0, 3}, {}, UnitSystem::reduced()).value;
  const double si = energy_numeric(g, atom, {0, 0, 3}, {}, UnitSystem::si()).value;
  EXPECT_LT(rel(si / red, UnitSystem::reduced().epsilon0() / UnitSystem::si().epsilon0()), 1e-12);
}
