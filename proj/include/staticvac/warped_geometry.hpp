#pragma once

// Curvature, Hessian and static-equation residuals of rotationally symmetric
// metrics  g = dr (x) dr / W(r) + r^2 g_cross  with potential u(r).
//
// Every evaluation is reduced to a WarpedSample, the same metric written in
// geodesic gauge  g = ds (x) ds + phi(s)^2 g_cross  (phi = r, phi_s = sqrt(W)).
// Product cylinders (constant phi) produce WarpedSamples too, so all pointwise
// identities are implemented once.

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "staticvac/jet.hpp"

namespace staticvac {

// Points closer than this to a zero of W or to a domain end are never sampled.
inline constexpr double kDomainMargin = 1e-8;

struct CrossSection {
  int curvature_sign = 1;  // +1 unit sphere, 0 flat, -1 unit hyperbolic
  double volume = 0.0;     // (n-1)-volume of the cross-section
  std::optional<int> genus;

  static CrossSection round_sphere(int n);
  static CrossSection flat(double volume);
  static CrossSection hyperbolic(double volume);
  // Compact hyperbolic surface (n = 3) of the given genus, volume 4*pi*(genus - 1).
  static CrossSection hyperbolic_surface(int genus);

  // Throws ParameterError when the invariants fail for dimension n.
  void validate(int n) const;

  // Genus of a two-dimensional cross-section: 0 sphere, 1 torus, stored genus if hyperbolic.
  std::optional<int> surface_genus() const;
};

struct PowerTerm {
  double coeff;
  double exponent;
};

// r -> sum_j coeff_j * r^exponent_j, with exact derivatives through jets.
class PowerSum {
 public:
  PowerSum() = default;
  explicit PowerSum(std::vector<PowerTerm> terms);

  // Kottler profile  k - lambda_sign * r^2 - 2 m r^(2-n).
  static PowerSum kottler(int n, int k, int lambda_sign, double mass);

  double operator()(double r) const;
  Jet<4> jet(double r) const;
  std::span<const PowerTerm> terms() const { return terms_; }

 private:
  std::vector<PowerTerm> terms_;
};

using RadialFunction = std::function<double(double)>;

// u(r) = scale * sqrt(radicand(r)).
struct SqrtPotential {
  double scale = 1.0;
  PowerSum radicand;
};

// One point of a warped metric in geodesic gauge. Derivatives are in arclength s.
struct WarpedSample {
  int n = 3;
  int k = 1;
  double phi = 0.0, phi_s = 0.0, phi_ss = 0.0;
  double u = 0.0, u_s = 0.0, u_ss = 0.0, u_sss = 0.0;
};

struct RadialDomain {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool bounded() const { return hi < std::numeric_limits<double>::infinity(); }
};

class RadialGeometry {
 public:
  // Analytic profile and potential.
  RadialGeometry(int n, CrossSection cross, int lambda_sign, RadialDomain domain,
                 PowerSum profile, SqrtPotential potential);
  // User-supplied profile and potential; derivatives by Richardson differences.
  RadialGeometry(int n, CrossSection cross, int lambda_sign, RadialDomain domain,
                 RadialFunction profile, RadialFunction potential);

  // Kottler family member with u = sqrt(W) on the given domain.
  static RadialGeometry kottler(int n, CrossSection cross, int lambda_sign, double mass,
                                RadialDomain domain);

  int dimension() const { return n_; }
  const CrossSection& cross() const { return cross_; }
  int lambda_sign() const { return lambda_sign_; }
  const RadialDomain& domain() const { return domain_; }
  bool analytic() const { return analytic_; }
  // The Kottler coefficients when the profile is a power sum.
  const std::optional<PowerSum>& power_profile() const { return power_profile_; }

  double W(double r) const;
  double u(double r) const;

  // Throws DomainError unless lo < r < hi and W(r) > 0.
  void require_interior(double r) const;

  WarpedSample sample(double r) const;

 private:
  WarpedSample sample_analytic(double r) const;
  WarpedSample sample_numeric(double r) const;

  int n_;
  CrossSection cross_;
  int lambda_sign_;
  RadialDomain domain_;
  bool analytic_;
  std::optional<PowerSum> power_profile_;
  std::optional<SqrtPotential> sqrt_potential_;
  RadialFunction profile_fn_;
  RadialFunction potential_fn_;
};

struct CurvatureSample {
  double r = 0.0;
  double ric_radial = 0.0;
  double ric_tangential = 0.0;
  double scalar = 0.0;
  double hess_radial = 0.0;
  double hess_tangential = 0.0;
  double laplacian = 0.0;
  double grad_norm_sq = 0.0;
};

struct StaticResidual {
  double tensor_radial = 0.0;
  double tensor_tangential = 0.0;
  double laplace = 0.0;
  double scalar = 0.0;

  double max_abs() const;
};

CurvatureSample curvature(const WarpedSample& s);
CurvatureSample curvature_at(const RadialGeometry& geom, double r);

// Second-order central differences of W and u with step h; an independent
// route to the quantities of curvature_at.
CurvatureSample finite_difference_curvature(const RadialGeometry& geom, double r, double h);

// Residuals of  u Ric = D^2 u + s n u g,  Delta u = -s n u,  R = s n (n-1).
StaticResidual static_residual(const CurvatureSample& c, double u, int n, int lambda_sign);
StaticResidual static_residual(const RadialGeometry& geom, double r);

}  // namespace staticvac
