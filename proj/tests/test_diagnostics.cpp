#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "staticvac/diagnostics.hpp"
#include "staticvac/errors.hpp"
#include "staticvac/horizon_mass.hpp"
#include "staticvac/model_catalog.hpp"

using namespace staticvac;

namespace {

constexpr double kPi = std::numbers::pi;

PowerSum perturbed_profile() { return PowerSum({{1.0, 0.0}, {-1.0, 2.0}, {-0.01, 3.0}}); }

RadialGeometry perturbed() {
  return RadialGeometry(3, CrossSection::round_sphere(3), 1, {0.0, 0.9}, perturbed_profile(),
                        SqrtPotential{1.0, perturbed_profile()});
}

double relative_spread(const std::vector<std::pair<double, double>>& samples) {
  double lo = samples.front().second, hi = lo;
  for (const auto& [t, v] : samples) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return (hi - lo) / std::abs(hi);
}

ModelData sds01() { return build({ModelKind::SchwarzschildDeSitter, 3, 0.1}); }

}  // namespace

TEST(Shen, DeSitter) {
  const auto m = build({ModelKind::DeSitter, 3});
  const auto r = shen_residual(m, interior_grid(m, 100));
  EXPECT_LT(r.residual_max, 1e-10);
  EXPECT_LT(r.quad_term_max_abs, 1e-12);
}

TEST(Shen, SchwarzschildDeSitter) {
  const auto m = sds01();
  const auto r = shen_residual(m, interior_grid(m, 100));
  EXPECT_LT(r.residual_max, 1e-9);
  EXPECT_GT(r.quad_term_min, 1e-6);
}

TEST(Shen, QuadraticTermMatchesHessianSplit) {
  const auto m = sds01();
  for (double r : interior_grid(m, 20)) {
    const auto c = curvature_at(*m.radial(), r);
    const double d = c.hess_radial - c.hess_tangential;
    EXPECT_NEAR(shen_point(m.sample(r)).quad, 2.0 * d * d / 3.0, 1e-12 * std::max(1.0, d * d));
  }
}

TEST(Shen, DetectsNonSolution) {
  EXPECT_GT(shen_residual(perturbed(), {0.3, 0.5, 0.7}).residual_max, 1e-3);
}

TEST(Shen, AllKindsAllDimensions) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& triple : default_catalog(n)) {
      const auto m = build(triple);
      const auto r = shen_residual(m, interior_grid(m, 100));
      EXPECT_LT(r.residual_max, 1e-9) << to_string(triple.kind) << " n=" << n;
      EXPECT_GE(r.quad_term_min, -1e-12) << to_string(triple.kind) << " n=" << n;
    }
  }
}

TEST(Bochner, Identity) {
  const auto ds = build({ModelKind::DeSitter, 3});
  EXPECT_LT(std::abs(bochner_check(*ds.radial(), 0.5)), 1e-10);
  const auto sads = build({ModelKind::SchwarzschildAdS, 3, 1.0});
  EXPECT_LT(std::abs(bochner_check(*sads.radial(), 3.0)), 1e-9);
  EXPECT_GT(std::abs(bochner_check(perturbed(), 0.5)), 1e-3);
}

TEST(Divergence, HoldsOnModels) {
  for (const auto& triple : default_catalog(3)) {
    const auto m = build(triple);
    if (m.lambda_sign == 0) continue;
    for (double r : interior_grid(m, 40)) {
      if (m.extremum_locus_radius && std::abs(r - *m.extremum_locus_radius) < 1e-3) continue;
      const auto s = m.sample(r);
      const double u_ref = m.lambda_sign > 0 ? m.u_extremum : (m.has_horizon() ? 0.0 : 1.0);
      if (std::abs(u_ref - s.u) < 1e-6) continue;
      const auto d = divergence_identity(s, m.lambda_sign, u_ref);
      EXPECT_NEAR(d.lhs, d.rhs, 1e-9 * std::max(1.0, std::abs(d.rhs)))
          << to_string(triple.kind) << " r=" << r;
    }
  }
}

TEST(UFunction, DeSitterIsFourPi) {
  const auto m = build({ModelKind::DeSitter, 3});
  const auto p = branch_problem(m, Branch::Outer);
  const auto u = U_function(p, default_t_grid(p, 50));
  ASSERT_EQ(u.size(), 50u);
  EXPECT_LT(relative_spread(u), 1e-9);
  EXPECT_NEAR(u.front().second, 4.0 * kPi, 1e-10);
  std::vector<double> grid;
  for (int i = 1; i <= 9; ++i) grid.push_back(0.1 * i);
  for (const auto& [t, v] : U_function(m, Branch::Outer, grid)) EXPECT_NEAR(v, 4.0 * kPi, 1e-10);
}

TEST(UFunction, AntiDeSitterIsConstant) {
  const auto m = build({ModelKind::AntiDeSitter, 3});
  const auto p = branch_problem(m, Branch::Outer);
  EXPECT_LT(relative_spread(U_function(p, default_t_grid(p, 50))), 1e-9);
}

TEST(UFunction, SchwarzschildDeSitterDeviates) {
  const auto m = sds01();
  const auto p = branch_problem(m, Branch::Outer);
  const auto u = U_function(p, default_t_grid(p, 50));
  EXPECT_GT(relative_spread(u), 1e-6);
}

// Warped profiles that satisfy Delta u = -+n u and the gradient estimate without
// solving the full static system: u = cos(l s) or cosh(l s) in arclength with
// phi = sin(l s)^p or sinh(l s)^p, p = (n - l^2) / ((n - 1) l^2).
namespace {

RadialGeometry synthetic(int sign, double l) {
  const int n = 3;
  const double p = (n - l * l) / ((n - 1) * l * l);
  const double c = p * p * l * l;
  const PowerSum w({{c, 2.0 - 2.0 / p}, {sign > 0 ? -c : c, 2.0}});
  const PowerSum rad({{1.0, 0.0}, {sign > 0 ? -1.0 : 1.0, 2.0 / p}});
  const RadialDomain dom = sign > 0 ? RadialDomain{0.0, 1.0} : RadialDomain{0.0};
  return RadialGeometry(n, CrossSection::round_sphere(n), sign, dom, w, SqrtPotential{1.0, rad});
}

void check_synthetic(int sign, double l, double r_lo, double r_hi) {
  const auto g = synthetic(sign, l);
  for (double r = r_lo; r <= r_hi; r += (r_hi - r_lo) / 20.0) {
    const auto c = curvature_at(g, r);
    const double u = g.u(r);
    EXPECT_NEAR(c.laplacian, -sign * 3.0 * u, 1e-10 * std::max(1.0, u));
    const double d = sign * (1.0 - u * u) - c.grad_norm_sq;
    EXPECT_GE(d, -1e-12);
  }
  EXPECT_GT(static_residual(g, 0.5 * (r_lo + r_hi)).max_abs(), 1e-3);
  const auto p = branch_problem(g, 1.0, r_lo, r_hi);
  const double t_lo = std::min(g.u(r_lo), g.u(r_hi));
  const double t_hi = std::max(g.u(r_lo), g.u(r_hi));
  std::vector<double> grid;
  for (int i = 1; i < 50; ++i) grid.push_back(t_lo + (t_hi - t_lo) * i / 50.0);
  const auto u = U_function(p, grid);
  double total = 0.0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const double step = sign * (u[i - 1].second - u[i].second);
    EXPECT_GE(step, -1e-12 * u[i].second) << "t=" << u[i].first;
    total += step;
  }
  EXPECT_GT(total, 1e-3);
}

}  // namespace

TEST(UFunction, NonincreasingUnderGradientEstimate) { check_synthetic(1, 0.8, 0.05, 0.95); }

TEST(UFunction, NondecreasingUnderGradientEstimate) { check_synthetic(-1, 0.7, 0.1, 20.0); }

TEST(DeficitScan, Models) {
  const auto ds = build({ModelKind::DeSitter, 3});
  const auto a = gradient_deficit_scan(ds, interior_grid(ds, 100));
  EXPECT_LT(std::abs(a.deficit_min), 1e-12);
  EXPECT_LT(std::abs(a.deficit_max), 1e-12);
  const auto m = sds01();
  std::vector<double> grid = interior_grid(m, 100);
  grid.push_back(m.horizon("outer").radius);
  EXPECT_LT(gradient_deficit_scan(m, grid).deficit_min, -0.2);
  const auto an = build({ModelKind::AntiNariai, 3, std::nullopt, 2});
  EXPECT_LT(deficit(an, 5.0), -100.0);
}

TEST(DeficitScan, RigidityAcrossKinds) {
  for (const auto& triple : default_catalog(3)) {
    const auto m = build(triple);
    if (m.lambda_sign == 0) continue;
    const auto d = gradient_deficit_scan(m, interior_grid(m, 100));
    const double spread = std::max(std::abs(d.deficit_min), std::abs(d.deficit_max));
    const bool zero_mass = triple.kind == ModelKind::DeSitter || triple.kind == ModelKind::AntiDeSitter;
    if (zero_mass) {
      EXPECT_LT(spread, 1e-12) << to_string(triple.kind);
    } else {
      EXPECT_GT(spread, 1e-6) << to_string(triple.kind);
    }
  }
}

TEST(Bgh, Values) {
  const auto ds = build({ModelKind::DeSitter, 3});
  const auto a = bgh_integral(ds, "outer");
  EXPECT_NEAR(a.value, 0.0, 1e-12);
  EXPECT_FALSE(a.lambda_sign_mismatch);
  const auto b = bgh_integral(sds01(), "outer");
  EXPECT_NEAR(b.value, oracle::kSdsBghOuter, 1e-12);
  EXPECT_NEAR(b.value,
              oracle::kSdsGradOuter * (2.0 / (oracle::kSdsOuter * oracle::kSdsOuter) - 2.0) * 4.0 *
                  kPi * oracle::kSdsOuter * oracle::kSdsOuter,
              1e-12);
  const auto hyp = build({ModelKind::KottlerHyperbolic, 3, 0.3, 2});
  const auto c = bgh_integral(hyp, "horizon");
  EXPECT_LT(c.value, 0.0);
  EXPECT_TRUE(c.lambda_sign_mismatch);
}

TEST(AreaBounds, DeSitterEquality) {
  const auto checks = area_bounds(build({ModelKind::DeSitter, 3}), 0.0);
  ASSERT_FALSE(checks.empty());
  for (const auto& c : checks) {
    EXPECT_NEAR(c.area, 4.0 * kPi, 1e-12);
    EXPECT_NEAR(c.bound, 4.0 * kPi, 1e-12);
    EXPECT_TRUE(c.satisfied);
  }
}

TEST(AreaBounds, SdsEqualityAtModelMass) {
  const auto m = sds01();
  int typed = 0;
  for (const auto& c : area_bounds(m, 0.1)) {
    EXPECT_TRUE(c.satisfied) << c.label;
    if (!c.label.ends_with(":zero_mass")) {
      ++typed;
      EXPECT_NEAR(c.area, c.bound, 1e-10) << c.label;
    }
  }
  EXPECT_EQ(typed, 2);
  const double ri = oracle::kSdsInner, ro = oracle::kSdsOuter;
  EXPECT_NEAR(sds_radius_inner(3, 0.1), ri, 1e-14);
  EXPECT_NEAR(sds_radius_outer(3, 0.1), ro, 1e-14);
}

TEST(AreaBounds, SdsBlackHoleBoundViolatedBelowMass) {
  bool violated = false;
  for (const auto& c : area_bounds(sds01(), 0.05)) {
    if (c.label == "inner:black_hole") violated = !c.satisfied;
  }
  EXPECT_TRUE(violated);
  EXPECT_NEAR(sds_radius_inner(3, 0.05), oracle::kSdsInner005, 1e-14);
  EXPECT_NEAR(sds_radius_outer(3, 0.05), oracle::kSdsOuter005, 1e-14);
}

TEST(Hawking, ConstantOnHyperbolicKottler) {
  for (double mass : {-0.1, 0.3}) {
    const auto m = build({ModelKind::KottlerHyperbolic, 3, mass, 2});
    const auto p = branch_problem(m, Branch::Outer);
    for (double t : default_t_grid(p, 20)) EXPECT_NEAR(hawking_mass(m, t), mass, 1e-8);
  }
  const auto m = build({ModelKind::KottlerHyperbolic, 3, 0.3, 2});
  EXPECT_NEAR(hawking_mass(m, 1.5), hawking_mass(m, 3.0), 1e-10);
}

TEST(Hawking, Unsupported) {
  EXPECT_THROW(hawking_mass(sds01(), 0.3), UnsupportedError);
}

TEST(ChruscielSimon, EqualityOnModel) {
  const auto m = build({ModelKind::KottlerHyperbolic, 3, -0.1, 2});
  const auto r = chrusciel_simon_area(m, -0.1, 2);
  EXPECT_NEAR(r.lhs, r.rhs, 1e-10);
  EXPECT_TRUE(r.satisfied);
  EXPECT_THROW(chrusciel_simon_area(m, 0.1, 2), DomainError);
}

TEST(ChruscielSimon, AreaScalesWithGenus) {
  const auto m = build({ModelKind::KottlerHyperbolic, 3, -0.1, 3});
  const auto r = chrusciel_simon_area(m, -0.1, 2);
  const double r_mu = oracle::kHypHorizonMinus01;
  EXPECT_GT(r.lhs, 4.0 * kPi * r_mu * r_mu);
  EXPECT_NEAR(r.lhs / (4.0 * kPi * r_mu * r_mu), 2.0, 1e-12);
  EXPECT_TRUE(r.satisfied);
}

TEST(ConformalDeficit, Decay) {
  const auto ads = build({ModelKind::AntiDeSitter, 3});
  for (double r : {1.0, 10.0, 100.0}) EXPECT_EQ(conformal_deficit(ads, r), 0.0);
  const auto sads = build({ModelKind::SchwarzschildAdS, 3, 1.0});
  EXPECT_NEAR(conformal_deficit(sads, 100.0), oracle::kSadsDeficit100, 1e-9);
  EXPECT_NEAR(conformal_deficit(sads, 400.0), oracle::kSadsDeficit400, 1e-9);
  const auto hyp = build({ModelKind::KottlerHyperbolic, 3, 0.3, 2});
  EXPECT_NEAR(conformal_deficit(hyp, 100.0), -2.0 * 0.3 * 2.0 / 100.0, 1e-6);
  for (const auto* m : {&sads, &hyp}) {
    for (double r : {100.0, 200.0, 400.0}) {
      const double ratio = conformal_deficit(*m, 2.0 * r) / conformal_deficit(*m, r);
      EXPECT_NEAR(ratio, 0.5, 0.05);
    }
  }
  EXPECT_THROW(conformal_deficit(sds01(), 0.5), UnsupportedError);
}

TEST(Diagnose, PristineCatalogHasNoBreaches) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& triple : default_catalog(n)) {
      const auto rep = diagnose(build(triple));
      EXPECT_TRUE(rep.breaches.empty()) << rep.model << " n=" << n << ": "
                                        << (rep.breaches.empty() ? "" : rep.breaches.front());
      EXPECT_LT(rep.static_residual_max, 1e-10);
      EXPECT_LT(rep.fd_residual_max, 1e-5);
    }
  }
}
