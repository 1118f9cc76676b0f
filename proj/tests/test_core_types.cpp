// Copyright 2026 The vdw-images Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "vdw/core_types.hpp"

using namespace vdw;

TEST(Cylindrical, OnXAxis) {
  const auto c = to_cylindrical({1, 0, 2});
  EXPECT_DOUBLE_EQ(c.rho, 1.0);
  EXPECT_DOUBLE_EQ(c.phi, 0.0);
  EXPECT_DOUBLE_EQ(c.z, 2.0);
}

TEST(Cylindrical, AxisPointHasZeroAzimuth) {
  const auto c = to_cylindrical({0, 0, 5});
  EXPECT_EQ(c.rho, 0.0);
  EXPECT_EQ(c.phi, 0.0);
  EXPECT_EQ(c.z, 5.0);
}

TEST(Cylindrical, PythagoreanTriple) {
  const auto c = to_cylindrical({3, 4, 0});
  EXPECT_DOUBLE_EQ(c.rho, 5.0);
  EXPECT_DOUBLE_EQ(c.phi, std::atan2(4.0, 3.0));
  EXPECT_EQ(c.z, 0.0);
}

TEST(Cylindrical, RoundTrip) {
  for (double rho : {0.1, 1.0, 7.5})
    for (double phi : {-3.0, -1.0, 0.0, 0.5, 2.0, 3.1})
      for (double z : {-2.0, 0.3, 4.0}) {
        const auto c = to_cylindrical(from_cylindrical(rho, phi, z));
        EXPECT_NEAR(c.rho, rho, 1e-12 * rho);
        EXPECT_NEAR(c.phi, phi, 1e-12 * std::abs(phi) + 1e-15);
        EXPECT_NEAR(c.z, z, 1e-12 * std::abs(z));
        EXPECT_GT(c.phi, -std::numbers::pi);
        EXPECT_LE(c.phi, std::numbers::pi);
      }
}

TEST(Cylindrical, FrameIsOrthonormal) {
  const auto f = cylindrical_frame(0.7);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_NEAR(dot(f[i], f[j]), i == j ? 1.0 : 0.0, 1e-15);
}

TEST(Region, Examples) {
  EXPECT_TRUE(physical_region(GeometryConfig::plane(), {0, 0, 1}));
  EXPECT_FALSE(physical_region(GeometryConfig::plane(), {0, 0, 0}));
  EXPECT_FALSE(physical_region(GeometryConfig::grounded_sphere(2), {0, 0, 1}));
  EXPECT_TRUE(physical_region(GeometryConfig::isolated_sphere(2), {0, 0, -3}));
  EXPECT_TRUE(physical_region(GeometryConfig::boss_hat(1), {5, 0, 0.5}));
  EXPECT_FALSE(physical_region(GeometryConfig::boss_hat(1), {0.5, 0, 0.5}));
  EXPECT_FALSE(physical_region(GeometryConfig::boss_hat(1), {5, 0, -0.5}));
}

TEST(Region, DistanceToSurface) {
  EXPECT_DOUBLE_EQ(distance_to_surface(GeometryConfig::plane(), {3, 4, 2}), 2.0);
  EXPECT_DOUBLE_EQ(distance_to_surface(GeometryConfig::grounded_sphere(1), {0, 0, 3}), 2.0);
  EXPECT_DOUBLE_EQ(distance_to_surface(GeometryConfig::boss_hat(1), {3, 0, 0.5}), 0.5);
  EXPECT_DOUBLE_EQ(distance_to_surface(GeometryConfig::boss_hat(1), {0, 0, 1.5}), 0.5);
}

TEST(Geometry, RejectsNonPositiveRadius) {
  EXPECT_THROW(GeometryConfig::grounded_sphere(0.0), InvalidArgument);
  EXPECT_THROW(GeometryConfig::boss_hat(-1.0), InvalidArgument);
  EXPECT_THROW(GeometryConfig::isolated_sphere(std::nan("")), InvalidArgument);
}

TEST(Variances, NegativeRejected) {
  EXPECT_THROW(DipoleVariances(Frame::cartesian, -1, 0, 0), InvalidArgument);
  const auto v = DipoleVariances::isotropic(3.0);
  EXPECT_TRUE(v.is_isotropic());
  EXPECT_DOUBLE_EQ(v.total(), 3.0);
}

TEST(Variances, DominantTransition) {
  const auto u = UnitSystem::si();
  const auto atom = AtomSpec::from_transition(2e-40, 3e15, u);
  EXPECT_NEAR(atom.variances.total(), 1.5 * u.hbar() * 3e15 * 2e-40, 1e-15 * atom.variances.total());
  ASSERT_TRUE(atom.transition.has_value());
  EXPECT_EQ(atom.transition->omega10, 3e15);
}

TEST(Units, ReducedIsFourPiEpsZeroOne) {
  const auto r = UnitSystem::reduced();
  EXPECT_DOUBLE_EQ(r.four_pi_eps0(), 1.0);
  EXPECT_DOUBLE_EQ(r.epsilon0(), 1.0 / (4.0 * std::numbers::pi));
  EXPECT_EQ(r.hbar(), 1.0);
}

TEST(Units, Codata) {
  const auto s = UnitSystem::si();
  EXPECT_DOUBLE_EQ(s.epsilon0(), 8.8541878128e-12);
  EXPECT_DOUBLE_EQ(s.hbar(), 1.054571817e-34);
  EXPECT_DOUBLE_EQ(s.boltzmann(), 1.380649e-23);
  EXPECT_DOUBLE_EQ(s.speed_of_light(), 299792458.0);
  EXPECT_DOUBLE_EQ(s.elementary_charge(), 1.602176634e-19);
  EXPECT_DOUBLE_EQ(s.bohr_radius(), 5.29177210903e-11);
}
