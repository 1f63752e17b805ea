#include "staticvac/model_catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "staticvac/errors.hpp"
#include "staticvac/horizon_mass.hpp"
#include "staticvac/numerics.hpp"

namespace staticvac {

namespace {

constexpr std::array<std::pair<ModelKind, std::string_view>, 10> kNames{{
    {ModelKind::Minkowski, "minkowski"},
    {ModelKind::Schwarzschild, "schwarzschild"},
    {ModelKind::DeSitter, "de_sitter"},
    {ModelKind::SchwarzschildDeSitter, "schwarzschild_de_sitter"},
    {ModelKind::Nariai, "nariai"},
    {ModelKind::AntiDeSitter, "anti_de_sitter"},
    {ModelKind::SchwarzschildAdS, "schwarzschild_anti_de_sitter"},
    {ModelKind::KottlerFlat, "kottler_flat"},
    {ModelKind::KottlerHyperbolic, "kottler_hyperbolic"},
    {ModelKind::AntiNariai, "anti_nariai"},
}};

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::string_view to_string(ModelKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ModelKind> parse_model_kind(std::string_view name) {
  for (const auto& [k, s] : kNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

const std::vector<ModelKind>& all_model_kinds() {
  static const std::vector<ModelKind> kinds = [] {
    std::vector<ModelKind> v;
    for (const auto& entry : kNames) v.push_back(entry.first);
    return v;
  }();
  return kinds;
}

int lambda_sign_of(ModelKind kind) {
  switch (kind) {
    case ModelKind::Minkowski:
    case ModelKind::Schwarzschild:
      return 0;
    case ModelKind::DeSitter:
    case ModelKind::SchwarzschildDeSitter:
    case ModelKind::Nariai:
      return 1;
    default:
      return -1;
  }
}

std::string_view to_string(ExtremumKind kind) {
  switch (kind) {
    case ExtremumKind::Max: return "max";
    case ExtremumKind::Min: return "min";
    case ExtremumKind::Sup: return "sup";
  }
  return "unknown";
}

double m_max(int n) {
  if (n < 3) throw ParameterError("m_max requires n >= 3");
  return std::sqrt(std::pow(n - 2.0, n - 2.0) / std::pow(static_cast<double>(n), n));
}

double sds_u_max(int n, double m) {
  if (!(m >= 0.0 && m <= m_max(n))) throw DomainError("sds_u_max requires 0 <= m <= m_max");
  return std::sqrt(1.0 - std::pow(m / m_max(n), 2.0 / n));
}

double sds_max_locus(int n, double m) {
  if (!(m >= 0.0 && m <= m_max(n))) throw DomainError("sds_max_locus requires 0 <= m <= m_max");
  return std::pow((n - 2) * m, 1.0 / n);
}

// ---------------------------------------------------------------------------
// Cylinders

CylinderGeometry::CylinderGeometry(int n, CylinderKind kind, CrossSection cross)
    : n_(n), kind_(kind), cross_(std::move(cross)) {
  if (n_ < 3) throw ParameterError("dimension must be at least 3");
  cross_.validate(n_);
  const int expected = kind_ == CylinderKind::Nariai ? 1 : -1;
  if (cross_.curvature_sign != expected) {
    throw ParameterError("Nariai needs a round cross-section, anti-Nariai a hyperbolic one");
  }
}

RadialDomain CylinderGeometry::domain() const {
  if (kind_ == CylinderKind::Nariai) return {0.0, numerics::kPi};
  return {-kInf, kInf};
}

double CylinderGeometry::areal_radius() const { return std::sqrt((n_ - 2.0) / n_); }

double CylinderGeometry::u(double r) const {
  return kind_ == CylinderKind::Nariai ? std::sin(r) : std::cosh(r);
}

double CylinderGeometry::du_dr(double r) const {
  return kind_ == CylinderKind::Nariai ? std::cos(r) : std::sinh(r);
}

double CylinderGeometry::grad_norm_sq(double r) const {
  const double d = du_dr(r);
  return n_ * d * d;
}

WarpedSample CylinderGeometry::sample(double r) const {
  if (kind_ == CylinderKind::Nariai && !(r >= 0.0 && r <= numerics::kPi)) {
    throw DomainError("Nariai coordinate must lie in [0, pi]");
  }
  if (!std::isfinite(r)) throw DomainError("cylinder coordinate must be finite");
  // Arclength is r / sqrt(n).
  const double rn = std::sqrt(static_cast<double>(n_));
  const double sign = kind_ == CylinderKind::Nariai ? -1.0 : 1.0;
  WarpedSample s;
  s.n = n_;
  s.k = cross_.curvature_sign;
  s.phi = areal_radius();
  s.phi_s = 0.0;
  s.phi_ss = 0.0;
  s.u = u(r);
  s.u_s = rn * du_dr(r);
  s.u_ss = sign * n_ * u(r);
  s.u_sss = sign * n_ * rn * du_dr(r);
  return s;
}

CurvatureSample curvature_at(const CylinderGeometry& geom, double r) {
  auto c = curvature(geom.sample(r));
  c.r = r;
  return c;
}

CurvatureSample finite_difference_curvature(const CylinderGeometry& geom, double r, double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  const auto d = geom.domain();
  if (!(r - 2 * h >= d.lo && r + 2 * h <= d.hi)) {
    throw DomainError("finite-difference stencil leaves the cylinder domain");
  }
  const int n = geom.dimension();
  const double phi = geom.areal_radius();
  const double u0 = geom.u(r), up = geom.u(r + h), um = geom.u(r - h);
  const double u1 = (up - um) / (2 * h);
  const double u2 = (up - 2 * u0 + um) / (h * h);
  CurvatureSample c;
  c.r = r;
  c.ric_radial = 0.0;
  c.ric_tangential = (n - 2) * geom.cross().curvature_sign / (phi * phi);
  c.scalar = c.ric_radial + (n - 1) * c.ric_tangential;
  c.hess_radial = n * u2;
  c.hess_tangential = 0.0;
  c.laplacian = c.hess_radial + (n - 1) * c.hess_tangential;
  c.grad_norm_sq = n * u1 * u1;
  return c;
}

StaticResidual static_residual(const CylinderGeometry& geom, double r) {
  const auto s = geom.sample(r);
  return static_residual(curvature(s), s.u, geom.dimension(), geom.lambda_sign());
}

// ---------------------------------------------------------------------------
// ModelData

const CrossSection& ModelData::cross() const {
  return std::visit([](const auto& g) -> const CrossSection& { return g.cross(); }, geometry);
}

RadialDomain ModelData::domain() const {
  return std::visit([](const auto& g) { return g.domain(); }, geometry);
}

WarpedSample ModelData::sample(double r) const {
  return std::visit([r](const auto& g) { return g.sample(r); }, geometry);
}

double ModelData::u(double r) const {
  return std::visit([r](const auto& g) { return g.u(r); }, geometry);
}

namespace {

// u^2 and |Du|^2 = W'^2/4 for the Kottler radial models, valid on the closed domain.
struct PointSquares {
  double u2;
  double grad2;
};

PointSquares point_squares(const ModelData& model, double r) {
  if (const auto* g = model.radial(); g != nullptr && g->power_profile()) {
    const auto& dom = g->domain();
    if (!(r >= dom.lo && r <= dom.hi)) {
      throw DomainError("r = " + std::to_string(r) + " outside the closed radial domain");
    }
    const auto j = g->power_profile()->jet(r);
    const double w1 = j.derivative(1);
    return {j.value(), 0.25 * w1 * w1};
  }
  const auto s = model.sample(r);
  return {s.u * s.u, s.u_s * s.u_s};
}

}  // namespace

double ModelData::grad_norm_sq(double r) const { return point_squares(*this, r).grad2; }

const HorizonSeed& ModelData::horizon(std::string_view label) const {
  for (const auto& h : horizons) {
    if (h.label == label) return h;
  }
  throw ParameterError("model has no horizon labelled '" + std::string(label) + "'");
}

namespace {

double require_mass(const ModelTriple& t) {
  if (!t.mass) {
    throw ParameterError(std::string(to_string(t.kind)) + " requires a mass parameter");
  }
  if (!std::isfinite(*t.mass)) throw ParameterError("mass must be finite");
  return *t.mass;
}

CrossSection cross_for(const ModelTriple& t, int k) {
  if (t.genus && t.kind != ModelKind::KottlerHyperbolic && t.kind != ModelKind::AntiNariai) {
    throw ParameterError("genus applies only to hyperbolic cross-sections");
  }
  if (k == 1) {
    if (t.cross_volume) throw ParameterError("round cross-sections have a fixed volume");
    return CrossSection::round_sphere(t.n);
  }
  if (k == 0) return CrossSection::flat(t.cross_volume.value_or(numerics::unit_sphere_volume(t.n - 1)));
  if (t.genus) {
    auto c = CrossSection::hyperbolic_surface(*t.genus);
    if (t.cross_volume && std::abs(*t.cross_volume - c.volume) > 1e-12 * c.volume) {
      throw ParameterError("cross-section volume contradicts the genus");
    }
    return c;
  }
  return CrossSection::hyperbolic(t.cross_volume.value_or(numerics::unit_sphere_volume(t.n - 1)));
}

double half_slope(const PowerSum& w, double r) { return 0.5 * std::abs(w.jet(r).derivative(1)); }

ModelData kottler_model(const ModelTriple& t, int k, int s, double mass) {
  ModelData d{t, RadialGeometry::kottler(t.n, cross_for(t, k), s, mass, {0.0, kInf})};
  d.lambda_sign = s;
  const auto w = PowerSum::kottler(t.n, k, s, mass);

  std::vector<double> roots;
  if (mass != 0.0 || (s == 1 && k == 1) || (s == -1 && k == -1)) {
    roots = horizon_radii(t.n, mass, k, s).radii;
  }

  RadialDomain dom{0.0, kInf};
  if (s == 1) {
    dom.hi = roots.back();
    if (roots.size() == 2) dom.lo = roots.front();
  } else if (!roots.empty()) {
    dom.lo = roots.back();
  }
  d.geometry = RadialGeometry::kottler(t.n, cross_for(t, k), s, mass, dom);

  auto seed = [&](std::string label, double r) {
    d.horizons.push_back({std::move(label), r, r, half_slope(w, r)});
  };
  if (s == 1) {
    if (roots.size() == 2) seed("inner", roots.front());
    seed("outer", roots.back());
  } else if (!roots.empty()) {
    seed("horizon", roots.back());
  }
  return d;
}

}  // namespace

ModelData build(const ModelTriple& t) {
  if (t.n < 3) throw ParameterError("dimension must be at least 3");
  const double mm = m_max(t.n);
  const bool massless = t.kind == ModelKind::Minkowski || t.kind == ModelKind::DeSitter ||
                        t.kind == ModelKind::AntiDeSitter || t.kind == ModelKind::Nariai ||
                        t.kind == ModelKind::AntiNariai;
  if (massless && t.mass && *t.mass != 0.0) {
    throw ParameterError(std::string(to_string(t.kind)) + " carries no mass parameter");
  }
  if (t.genus && t.n != 3) throw ParameterError("genus is only meaningful for n = 3");

  switch (t.kind) {
    case ModelKind::Minkowski: {
      PowerSum one({{1.0, 0.0}});
      ModelData d{t, RadialGeometry(t.n, cross_for(t, 1), 0, {0.0, kInf}, one,
                                    SqrtPotential{1.0, one})};
      d.lambda_sign = 0;
      d.u_extremum = 1.0;
      d.extremum_kind = ExtremumKind::Sup;
      d.normalization = "sup";
      return d;
    }
    case ModelKind::Schwarzschild: {
      const double m = require_mass(t);
      if (!(m > 0.0)) throw ParameterError("Schwarzschild needs m > 0");
      auto d = kottler_model(t, 1, 0, m);
      d.u_extremum = 1.0;
      d.extremum_kind = ExtremumKind::Sup;
      d.normalization = "sup";
      return d;
    }
    case ModelKind::DeSitter: {
      auto d = kottler_model(t, 1, 1, 0.0);
      d.u_extremum = 1.0;
      d.extremum_locus_radius = 0.0;
      d.normalization = "u_max";
      return d;
    }
    case ModelKind::SchwarzschildDeSitter: {
      const double m = require_mass(t);
      if (!(m > 0.0 && m < mm)) throw ParameterError("Schwarzschild-de Sitter needs 0 < m < m_max");
      auto d = kottler_model(t, 1, 1, m);
      d.u_extremum = sds_u_max(t.n, m);
      d.extremum_locus_radius = sds_max_locus(t.n, m);
      d.normalization = "u_max";
      return d;
    }
    case ModelKind::AntiDeSitter: {
      auto d = kottler_model(t, 1, -1, 0.0);
      d.u_extremum = 1.0;
      d.extremum_kind = ExtremumKind::Min;
      d.extremum_locus_radius = 0.0;
      d.normalization = "u_min";
      return d;
    }
    case ModelKind::SchwarzschildAdS:
    case ModelKind::KottlerFlat:
    case ModelKind::KottlerHyperbolic: {
      const double m = require_mass(t);
      const int k = t.kind == ModelKind::SchwarzschildAdS ? 1
                    : t.kind == ModelKind::KottlerFlat    ? 0
                                                          : -1;
      if (k >= 0 && !(m > 0.0)) {
        throw ParameterError(std::string(to_string(t.kind)) + " needs m > 0");
      }
      if (k < 0 && !(m > -mm)) throw ParameterError("Kottler hyperbolic needs m > -m_max");
      auto d = kottler_model(t, k, -1, m);
      d.u_extremum = 0.0;
      d.extremum_kind = ExtremumKind::Min;
      d.extremum_locus_radius = d.horizons.front().radius;
      d.normalization = k == 0 ? "none" : "u_min";
      return d;
    }
    case ModelKind::Nariai: {
      CylinderGeometry g(t.n, CylinderKind::Nariai, cross_for(t, 1));
      ModelData d{t, g};
      d.lambda_sign = 1;
      d.u_extremum = 1.0;
      d.extremum_locus_radius = numerics::kPi / 2;
      const double rn = std::sqrt(static_cast<double>(t.n));
      d.horizons.push_back({"left", 0.0, g.areal_radius(), rn});
      d.horizons.push_back({"right", numerics::kPi, g.areal_radius(), rn});
      d.normalization = "u_max";
      return d;
    }
    case ModelKind::AntiNariai: {
      CylinderGeometry g(t.n, CylinderKind::AntiNariai, cross_for(t, -1));
      ModelData d{t, g};
      d.lambda_sign = -1;
      d.u_extremum = 1.0;
      d.extremum_kind = ExtremumKind::Min;
      d.extremum_locus_radius = 0.0;
      d.normalization = "u_min";
      return d;
    }
  }
  throw ParameterError("unknown model kind");
}

double deficit(const ModelData& model, double r) {
  if (model.lambda_sign == 0) {
    throw UnsupportedError("the gradient deficit is defined only for Lambda != 0");
  }
  const auto [u2, g2] = point_squares(model, r);
  if (model.lambda_sign > 0) return model.u_extremum * model.u_extremum - u2 - g2;
  const double c = model.has_horizon() ? model.cross().curvature_sign
                                       : model.u_extremum * model.u_extremum;
  return u2 - c - g2;
}

double komar_mass(const ModelData& model) {
  if (model.triple.kind != ModelKind::Schwarzschild) {
    throw UnsupportedError("komar_mass is defined for asymptotically flat Schwarzschild data");
  }
  const int n = model.dimension();
  const auto& h = model.horizons.front();
  const double area = model.cross().volume * std::pow(h.areal_radius, n - 1);
  return h.grad_u * area / ((n - 2) * numerics::unit_sphere_volume(n - 1));
}

std::vector<ModelTriple> default_catalog(int n) {
  const double mm = m_max(n);
  std::vector<ModelTriple> out;
  out.push_back({ModelKind::Minkowski, n});
  out.push_back({ModelKind::Schwarzschild, n, 0.5});
  out.push_back({ModelKind::DeSitter, n});
  out.push_back({ModelKind::SchwarzschildDeSitter, n, n == 3 ? 0.1 : 0.5 * mm});
  out.push_back({ModelKind::Nariai, n});
  out.push_back({ModelKind::AntiDeSitter, n});
  out.push_back({ModelKind::SchwarzschildAdS, n, 1.0});
  out.push_back({ModelKind::KottlerFlat, n, 1.0});
  ModelTriple hyp{ModelKind::KottlerHyperbolic, n, 0.3};
  if (n == 3) hyp.genus = 2;
  out.push_back(hyp);
  ModelTriple anti{ModelKind::AntiNariai, n};
  if (n == 3) anti.genus = 2;
  out.push_back(anti);
  return out;
}

std::vector<double> interior_grid(const ModelData& model, std::size_t count) {
  auto d = model.domain();
  double lo = d.lo, hi = d.hi;
  if (std::isinf(lo) && std::isinf(hi)) {
    lo = -3.0;
    hi = 3.0;
  } else if (std::isinf(hi)) {
    const double margin = 0.1 * std::max(lo, 1.0);
    lo += margin;
    hi = lo + 5.0;
  } else {
    const double margin = 0.1 * (hi - lo);
    lo += margin;
    hi -= margin;
  }
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = count == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (count - 1.0);
  }
  return grid;
}

nlohmann::json to_json(const ModelData& model) {
  nlohmann::json j;
  j["kind"] = to_string(model.triple.kind);
  j["n"] = model.triple.n;
  j["mass"] = model.triple.mass ? nlohmann::json(*model.triple.mass) : nlohmann::json(nullptr);
  j["genus"] = model.triple.genus ? nlohmann::json(*model.triple.genus) : nlohmann::json(nullptr);
  j["lambda_sign"] = model.lambda_sign;
  j["cross_section"] = {{"curvature_sign", model.cross().curvature_sign},
                        {"volume", model.cross().volume}};
  j["u_extremum"] = {{"value", model.u_extremum}, {"kind", to_string(model.extremum_kind)}};
  j["extremum_locus_radius"] = model.extremum_locus_radius
                                   ? nlohmann::json(*model.extremum_locus_radius)
                                   : nlohmann::json(nullptr);
  j["normalization"] = model.normalization;
  j["horizons"] = nlohmann::json::array();
  for (const auto& h : model.horizons) {
    j["horizons"].push_back({{"label", h.label},
                             {"radius", h.radius},
                             {"areal_radius", h.areal_radius},
                             {"grad_u", h.grad_u}});
  }
  return j;
}

}  // namespace staticvac
