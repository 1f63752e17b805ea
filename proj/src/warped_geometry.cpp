#include "staticvac/warped_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "staticvac/errors.hpp"
#include "staticvac/numerics.hpp"

namespace staticvac {

CrossSection CrossSection::round_sphere(int n) {
  return CrossSection{1, numerics::unit_sphere_volume(n - 1), std::nullopt};
}

CrossSection CrossSection::flat(double volume) { return CrossSection{0, volume, std::nullopt}; }

CrossSection CrossSection::hyperbolic(double volume) {
  return CrossSection{-1, volume, std::nullopt};
}

CrossSection CrossSection::hyperbolic_surface(int genus) {
  if (genus < 2) throw ParameterError("hyperbolic surface genus must be at least 2");
  return CrossSection{-1, 4.0 * numerics::kPi * (genus - 1), genus};
}

void CrossSection::validate(int n) const {
  if (curvature_sign < -1 || curvature_sign > 1) {
    throw ParameterError("cross-section curvature sign must be -1, 0 or +1");
  }
  if (!(volume > 0.0) || !std::isfinite(volume)) {
    throw ParameterError("cross-section volume must be positive");
  }
  if (genus) {
    if (curvature_sign != -1 || n != 3 || *genus < 2) {
      throw ParameterError("genus applies only to hyperbolic surfaces (n = 3, genus >= 2)");
    }
    const double expected = 4.0 * numerics::kPi * (*genus - 1);
    if (std::abs(volume - expected) > 1e-12 * expected) {
      throw ParameterError("hyperbolic surface volume must equal 4*pi*(genus - 1)");
    }
  }
}

std::optional<int> CrossSection::surface_genus() const {
  if (curvature_sign == 1) return 0;
  if (curvature_sign == 0) return 1;
  return genus;
}

PowerSum::PowerSum(std::vector<PowerTerm> terms) : terms_(std::move(terms)) {}

PowerSum PowerSum::kottler(int n, int k, int lambda_sign, double mass) {
  std::vector<PowerTerm> terms;
  if (k != 0) terms.push_back({static_cast<double>(k), 0.0});
  if (lambda_sign != 0) terms.push_back({-static_cast<double>(lambda_sign), 2.0});
  if (mass != 0.0) terms.push_back({-2.0 * mass, 2.0 - n});
  return PowerSum(std::move(terms));
}

double PowerSum::operator()(double r) const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.exponent == 0.0 ? t.coeff : t.coeff * std::pow(r, t.exponent);
  return s;
}

Jet<4> PowerSum::jet(double r) const {
  const auto x = Jet<4>::variable(r);
  Jet<4> s;
  for (const auto& t : terms_) {
    if (t.exponent == 0.0) {
      s += Jet<4>(t.coeff);
    } else {
      s += t.coeff * pow(x, t.exponent);
    }
  }
  return s;
}

namespace {

bool same_terms(const PowerSum& a, const PowerSum& b) {
  const auto ta = a.terms();
  const auto tb = b.terms();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].coeff != tb[i].coeff || ta[i].exponent != tb[i].exponent) return false;
  }
  return true;
}

void check_common(int n, const CrossSection& cross, int lambda_sign, const RadialDomain& d) {
  if (n < 3) throw ParameterError("dimension must be at least 3");
  cross.validate(n);
  if (lambda_sign < -1 || lambda_sign > 1) {
    throw ParameterError("lambda_sign must be -1, 0 or +1");
  }
  if (!(d.lo >= 0.0) || !(d.hi > d.lo)) throw ParameterError("invalid radial domain");
}

}  // namespace

RadialGeometry::RadialGeometry(int n, CrossSection cross, int lambda_sign, RadialDomain domain,
                               PowerSum profile, SqrtPotential potential)
    : n_(n),
      cross_(std::move(cross)),
      lambda_sign_(lambda_sign),
      domain_(domain),
      analytic_(true),
      power_profile_(std::move(profile)),
      sqrt_potential_(std::move(potential)) {
  check_common(n_, cross_, lambda_sign_, domain_);
  if (!(sqrt_potential_->scale > 0.0)) throw ParameterError("potential scale must be positive");
}

RadialGeometry::RadialGeometry(int n, CrossSection cross, int lambda_sign, RadialDomain domain,
                               RadialFunction profile, RadialFunction potential)
    : n_(n),
      cross_(std::move(cross)),
      lambda_sign_(lambda_sign),
      domain_(domain),
      analytic_(false),
      profile_fn_(std::move(profile)),
      potential_fn_(std::move(potential)) {
  check_common(n_, cross_, lambda_sign_, domain_);
  if (!profile_fn_ || !potential_fn_) throw ParameterError("profile and potential are required");
}

RadialGeometry RadialGeometry::kottler(int n, CrossSection cross, int lambda_sign, double mass,
                                       RadialDomain domain) {
  auto w = PowerSum::kottler(n, cross.curvature_sign, lambda_sign, mass);
  return RadialGeometry(n, std::move(cross), lambda_sign, domain, w, SqrtPotential{1.0, w});
}

double RadialGeometry::W(double r) const {
  return analytic_ ? (*power_profile_)(r) : profile_fn_(r);
}

double RadialGeometry::u(double r) const {
  if (!analytic_) return potential_fn_(r);
  const double v = sqrt_potential_->radicand(r);
  return sqrt_potential_->scale * std::sqrt(std::max(v, 0.0));
}

void RadialGeometry::require_interior(double r) const {
  if (!(r > domain_.lo && r < domain_.hi)) {
    throw DomainError("r = " + std::to_string(r) + " outside the open radial domain");
  }
  if (!(W(r) > 0.0)) throw DomainError("W(r) <= 0 at r = " + std::to_string(r));
}

WarpedSample RadialGeometry::sample(double r) const {
  require_interior(r);
  return analytic_ ? sample_analytic(r) : sample_numeric(r);
}

WarpedSample RadialGeometry::sample_analytic(double r) const {
  const auto wj = power_profile_->jet(r);
  const double w = wj.value();
  const double w1 = wj.derivative(1);
  const double w2 = wj.derivative(2);
  const double w3 = wj.derivative(3);
  const double sw = std::sqrt(w);

  WarpedSample s;
  s.n = n_;
  s.k = cross_.curvature_sign;
  s.phi = r;
  s.phi_s = sw;
  s.phi_ss = 0.5 * w1;

  const double a = sqrt_potential_->scale;
  if (same_terms(sqrt_potential_->radicand, *power_profile_)) {
    // u = a sqrt(W): simplified forms stay finite as W -> 0.
    s.u = a * sw;
    s.u_s = 0.5 * a * w1;
    s.u_ss = 0.5 * a * w2 * sw;
    s.u_sss = a * (0.5 * w * w3 + 0.25 * w2 * w1);
    return s;
  }
  const auto uj = a * sqrt(sqrt_potential_->radicand.jet(r));
  const double u1 = uj.derivative(1);
  const double u2 = uj.derivative(2);
  const double u3 = uj.derivative(3);
  s.u = uj.value();
  s.u_s = sw * u1;
  s.u_ss = w * u2 + 0.5 * w1 * u1;
  s.u_sss = sw * (w * u3 + 1.5 * w1 * u2 + 0.5 * w2 * u1);
  return s;
}

WarpedSample RadialGeometry::sample_numeric(double r) const {
  // Richardson stencils reach 2h on either side.
  const double room = std::min(r - domain_.lo, domain_.hi - r) / 2.5;
  auto step = [&](int order) { return std::min(numerics::default_fd_step(r, order), room); };
  const double w = profile_fn_(r);
  const double w1 = numerics::richardson_derivative(profile_fn_, r, 1, step(1));
  const double w2 = numerics::richardson_derivative(profile_fn_, r, 2, step(2));
  const double u1 = numerics::richardson_derivative(potential_fn_, r, 1, step(1));
  const double u2 = numerics::richardson_derivative(potential_fn_, r, 2, step(2));
  const double u3 = numerics::richardson_derivative(potential_fn_, r, 3, step(3));
  const double sw = std::sqrt(w);

  WarpedSample s;
  s.n = n_;
  s.k = cross_.curvature_sign;
  s.phi = r;
  s.phi_s = sw;
  s.phi_ss = 0.5 * w1;
  s.u = potential_fn_(r);
  s.u_s = sw * u1;
  s.u_ss = w * u2 + 0.5 * w1 * u1;
  s.u_sss = sw * (w * u3 + 1.5 * w1 * u2 + 0.5 * w2 * u1);
  return s;
}

double StaticResidual::max_abs() const {
  return std::max({std::abs(tensor_radial), std::abs(tensor_tangential), std::abs(laplace),
                   std::abs(scalar)});
}

CurvatureSample curvature(const WarpedSample& s) {
  const int n = s.n;
  CurvatureSample c;
  c.r = s.phi;
  c.ric_radial = -(n - 1) * s.phi_ss / s.phi;
  c.ric_tangential = -s.phi_ss / s.phi + (n - 2) * (s.k - s.phi_s * s.phi_s) / (s.phi * s.phi);
  c.scalar = c.ric_radial + (n - 1) * c.ric_tangential;
  c.hess_radial = s.u_ss;
  c.hess_tangential = s.phi_s * s.u_s / s.phi;
  c.laplacian = c.hess_radial + (n - 1) * c.hess_tangential;
  c.grad_norm_sq = s.u_s * s.u_s;
  return c;
}

CurvatureSample curvature_at(const RadialGeometry& geom, double r) {
  return curvature(geom.sample(r));
}

CurvatureSample finite_difference_curvature(const RadialGeometry& geom, double r, double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  const auto& d = geom.domain();
  if (!(r - 2 * h > d.lo && r + 2 * h < d.hi)) {
    throw DomainError("finite-difference stencil leaves the radial domain");
  }
  for (double x : {r - 2 * h, r, r + 2 * h}) {
    if (!(geom.W(x) > 0.0)) throw DomainError("finite-difference stencil reaches W <= 0");
  }
  const int n = geom.dimension();
  const int k = geom.cross().curvature_sign;
  const double w = geom.W(r), wp = geom.W(r + h), wm = geom.W(r - h);
  const double u = geom.u(r), up = geom.u(r + h), um = geom.u(r - h);
  const double w1 = (wp - wm) / (2 * h);
  const double u1 = (up - um) / (2 * h);
  const double u2 = (up - 2 * u + um) / (h * h);

  CurvatureSample c;
  c.r = r;
  c.ric_radial = -(n - 1) * w1 / (2 * r);
  c.ric_tangential = -w1 / (2 * r) + (n - 2) * (k - w) / (r * r);
  c.scalar = c.ric_radial + (n - 1) * c.ric_tangential;
  c.hess_radial = w * u2 + 0.5 * w1 * u1;
  c.hess_tangential = w * u1 / r;
  c.laplacian = c.hess_radial + (n - 1) * c.hess_tangential;
  c.grad_norm_sq = w * u1 * u1;
  return c;
}

StaticResidual static_residual(const CurvatureSample& c, double u, int n, int lambda_sign) {
  const double snu = lambda_sign * n * u;
  StaticResidual res;
  res.tensor_radial = u * c.ric_radial - c.hess_radial - snu;
  res.tensor_tangential = u * c.ric_tangential - c.hess_tangential - snu;
  res.laplace = c.laplacian + snu;
  res.scalar = c.scalar - lambda_sign * n * (n - 1);
  return res;
}

StaticResidual static_residual(const RadialGeometry& geom, double r) {
  const auto s = geom.sample(r);
  return static_residual(curvature(s), s.u, geom.dimension(), geom.lambda_sign());
}

}  // namespace staticvac
