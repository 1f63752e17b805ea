#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "staticvac/errors.hpp"
#include "staticvac/horizon_mass.hpp"
#include "staticvac/model_catalog.hpp"

using namespace staticvac;

TEST(HorizonRadii, DeSitter) {
  const auto h = horizon_radii(3, 0.0, 1, 1);
  ASSERT_EQ(h.radii.size(), 1u);
  EXPECT_NEAR(h.radii[0], 1.0, 1e-15);
  EXPECT_FALSE(h.degenerate);
}

TEST(HorizonRadii, SchwarzschildDeSitter) {
  const auto h = horizon_radii(3, 0.1, 1, 1);
  ASSERT_EQ(h.radii.size(), 2u);
  EXPECT_NEAR(h.radii[0], oracle::kSdsInner, 1e-15);
  EXPECT_NEAR(h.radii[1], oracle::kSdsOuter, 1e-15);
  const auto h2 = horizon_radii(3, 0.05, 1, 1);
  EXPECT_NEAR(h2.radii[0], oracle::kSdsInner005, 1e-15);
  EXPECT_NEAR(h2.radii[1], oracle::kSdsOuter005, 1e-15);
}

TEST(HorizonRadii, DegenerateAtMaximalMass) {
  const auto h = horizon_radii(3, m_max(3), 1, 1);
  ASSERT_EQ(h.radii.size(), 1u);
  EXPECT_NEAR(h.radii[0], std::sqrt(1.0 / 3.0), 1e-7);
  EXPECT_TRUE(h.degenerate);
  EXPECT_THROW(horizon_radii(3, 0.2, 1, 1), NoRootError);
}

TEST(HorizonRadii, HyperbolicKottler) {
  EXPECT_NEAR(horizon_radii(3, -0.1, -1, -1).radii.back(), oracle::kHypHorizonMinus01, 1e-15);
  EXPECT_NEAR(horizon_radii(3, 0.3, -1, -1).radii.back(), oracle::kHypHorizon03, 1e-15);
}

TEST(SurfaceGravity, Anchors) {
  EXPECT_EQ(k_plus(3, 0.0), 1.0);
  EXPECT_NEAR(k_minus(3, m_max(3)), std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(k_plus(3, 0.1), oracle::kKPlus01, 1e-13);
  EXPECT_NEAR(k_minus(3, 0.1), oracle::kKMinus01, 1e-13);
  EXPECT_NEAR(k_plus(3, 0.999 * m_max(3)), oracle::kKPlusNearMax, 1e-12);
  EXPECT_NEAR(k_minus(3, 0.999 * m_max(3)), oracle::kKMinusNearMax, 1e-12);
  EXPECT_NEAR(k_minus(3, 1e-6), oracle::kKMinusTiny, 1e-7);
  EXPECT_GT(k_plus(3, 0.999 * m_max(3)), std::sqrt(3.0) - 0.05);
  EXPECT_LT(k_plus(3, 0.999 * m_max(3)), std::sqrt(3.0));
  EXPECT_GT(k_minus(3, 1e-6), k_minus(3, 1e-5));
}

TEST(SurfaceGravity, DomainErrors) {
  EXPECT_THROW(k_plus(3, -0.01), DomainError);
  EXPECT_THROW(k_plus(3, m_max(3)), DomainError);
  EXPECT_THROW(k_minus(3, 0.0), DomainError);
  EXPECT_THROW(k_minus(3, 0.2), DomainError);
}

TEST(SurfaceGravity, MonotoneOnFineGrids) {
  for (int n = 3; n <= 5; ++n) {
    const double mm = m_max(n);
    const int count = 10000;
    double prev_p = k_plus(n, 0.0);
    double prev_m = k_minus(n, mm / (count + 1));
    for (int i = 1; i <= count; ++i) {
      const double m = mm * i / (count + 1);
      const double kp = k_plus(n, m);
      EXPECT_GT(kp, prev_p) << "n=" << n << " i=" << i;
      EXPECT_GE(kp, 1.0);
      EXPECT_LT(kp, std::sqrt(n));
      prev_p = kp;
      if (i > 1) {
        const double km = k_minus(n, m);
        EXPECT_LT(km, prev_m) << "n=" << n << " i=" << i;
        EXPECT_GT(km, std::sqrt(n));
        prev_m = km;
      }
    }
  }
}

TEST(SurfaceGravity, AgreesWithCatalogModels) {
  for (int n = 3; n <= 5; ++n) {
    for (int i = 1; i < 20; ++i) {
      const double m = m_max(n) * i / 20.0;
      const auto model = build({ModelKind::SchwarzschildDeSitter, n, m});
      EXPECT_NEAR(k_plus(n, m), model.horizon("outer").grad_u / model.u_extremum, 1e-12);
      EXPECT_NEAR(k_minus(n, m), model.horizon("inner").grad_u / model.u_extremum,
                  1e-12 * k_minus(n, m));
    }
  }
}

TEST(Inversion, Anchors) {
  EXPECT_EQ(invert_k_plus(3, 1.0), 0.0);
  EXPECT_EQ(invert_k_plus(3, 1.0 - 5e-13), 0.0);
  EXPECT_THROW(invert_k_plus(3, 0.9), DomainError);
  EXPECT_THROW(invert_k_plus(3, std::sqrt(3.0)), DomainError);
  EXPECT_NEAR(invert_k_minus(3, std::sqrt(3.0)), m_max(3), 1e-15);
  EXPECT_THROW(invert_k_minus(3, 1.5), DomainError);
  EXPECT_NEAR(invert_k_plus(3, k_plus(3, 0.07)), 0.07, 1e-10);
}

TEST(Inversion, RoundTripOnRandomMasses) {
  std::mt19937_64 rng(20240611);
  for (int n = 3; n <= 5; ++n) {
    std::uniform_real_distribution<double> dist(0.0, m_max(n));
    for (int i = 0; i < 100; ++i) {
      const double m = dist(rng);
      if (m <= 0.0) continue;
      EXPECT_LT(std::abs(invert_k_plus(n, k_plus(n, m)) - m), 1e-10) << "n=" << n << " m=" << m;
      EXPECT_LT(std::abs(invert_k_minus(n, k_minus(n, m)) - m), 1e-10) << "n=" << n << " m=" << m;
    }
  }
}

TEST(Classify, Types) {
  EXPECT_EQ(classify(1.0, 3), HorizonType::Cosmological);
  EXPECT_EQ(classify(std::sqrt(3.0), 3), HorizonType::Cylindrical);
  EXPECT_EQ(classify(3.495, 3), HorizonType::BlackHole);
  EXPECT_EQ(classify(std::sqrt(3.0) + 1e-6, 3, 1e-5), HorizonType::Cylindrical);
  for (int i = 1; i < 100; ++i) {
    const double m = m_max(3) * i / 100.0;
    EXPECT_EQ(classify(k_plus(3, m), 3), HorizonType::Cosmological);
    EXPECT_EQ(classify(k_minus(3, m), 3), HorizonType::BlackHole);
  }
  EXPECT_EQ(to_string(HorizonType::BlackHole), "black_hole");
}

TEST(VirtualMass, ZeroMassRigidity) {
  const auto r = virtual_mass({1.0}, 3);
  EXPECT_EQ(r.mass, 0.0);
  EXPECT_EQ(r.region_kind, RegionKind::Outer);
  EXPECT_FALSE(r.extrapolated);
}

TEST(VirtualMass, MaximumDominates) {
  const auto r = virtual_mass({k_plus(3, 0.1), 1.05}, 3);
  EXPECT_NEAR(r.mass, 0.1, 1e-10);
  EXPECT_EQ(r.region_kind, RegionKind::Outer);
}

TEST(VirtualMass, InnerRegion) {
  const auto r = virtual_mass({3.495}, 3);
  EXPECT_NEAR(r.mass, 0.1, 1e-3);
  EXPECT_EQ(r.region_kind, RegionKind::Inner);
  EXPECT_NEAR(virtual_mass({k_minus(3, 0.1)}, 3).mass, 0.1, 1e-10);
}

TEST(VirtualMass, CylindricalIsExtrapolated) {
  const auto r = virtual_mass({std::sqrt(3.0), std::sqrt(3.0)}, 3);
  EXPECT_EQ(r.region_kind, RegionKind::Cylindrical);
  EXPECT_EQ(r.mass, m_max(3));
  EXPECT_TRUE(r.extrapolated);
}

TEST(VirtualMass, RejectsBadInput) {
  EXPECT_THROW(virtual_mass({}, 3), ParameterError);
  EXPECT_THROW(virtual_mass({-1.0}, 3), ParameterError);
  EXPECT_THROW(virtual_mass({0.5}, 3), DomainError);
}

TEST(Killing, SurfaceGravityFromConnection) {
  EXPECT_NEAR(killing_kappa_check(0.5, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(killing_kappa_check(0.0, std::sqrt(3.0)), std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(killing_kappa_check(0.0, 0.7494), 0.7494, 1e-15);
  const auto c = killing_connection(0.3, 0.8);
  EXPECT_NEAR(c.gamma0_0r, 0.8 / 0.3, 1e-15);
  EXPECT_NEAR(c.gammar_00, 0.24, 1e-15);
  EXPECT_NEAR(c.grad_K_norm_sq, -1.28, 1e-15);
}

TEST(Killing, AgreesWithModelHorizons) {
  const auto m = build({ModelKind::SchwarzschildDeSitter, 3, 0.1});
  for (const auto& h : m.horizons) {
    EXPECT_NEAR(killing_kappa_check(0.0, h.grad_u), h.grad_u, 1e-14);
  }
}
