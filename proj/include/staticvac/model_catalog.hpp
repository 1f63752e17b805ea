#pragma once

// Closed-form static triples: the Kottler families over round, flat and
// hyperbolic cross-sections, plus the Nariai and anti-Nariai cylinders.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "staticvac/warped_geometry.hpp"

namespace staticvac {

enum class ModelKind {
  Minkowski,
  Schwarzschild,
  DeSitter,
  SchwarzschildDeSitter,
  Nariai,
  AntiDeSitter,
  SchwarzschildAdS,
  KottlerFlat,
  KottlerHyperbolic,
  AntiNariai,
};

std::string_view to_string(ModelKind kind);
std::optional<ModelKind> parse_model_kind(std::string_view name);
const std::vector<ModelKind>& all_model_kinds();
int lambda_sign_of(ModelKind kind);

struct ModelTriple {
  ModelKind kind = ModelKind::DeSitter;
  int n = 3;
  std::optional<double> mass;
  std::optional<int> genus;
  // Flat and hyperbolic cross-sections have no canonical volume; when absent
  // the catalog uses |S^{n-1}| (or 4*pi*(genus - 1) when a genus is given).
  std::optional<double> cross_volume;
};

// sqrt((n-2)^(n-2) / n^n)
double m_max(int n);

// Maximum of u on the Schwarzschild-de Sitter solution of mass m.
double sds_u_max(int n, double m);

// MAX(u) radius ((n-2) m)^(1/n) on Schwarzschild-de Sitter.
double sds_max_locus(int n, double m);

enum class CylinderKind { Nariai, AntiNariai };

// (1/n) [dr (x) dr + (n-2) g_cross] with u = sin r on [0, pi] (Nariai) or
// u = cosh r on the real line (anti-Nariai). r is not an arclength.
class CylinderGeometry {
 public:
  CylinderGeometry(int n, CylinderKind kind, CrossSection cross);

  int dimension() const { return n_; }
  CylinderKind kind() const { return kind_; }
  const CrossSection& cross() const { return cross_; }
  int lambda_sign() const { return kind_ == CylinderKind::Nariai ? 1 : -1; }
  RadialDomain domain() const;
  double areal_radius() const;

  double u(double r) const;
  double du_dr(double r) const;
  double grad_norm_sq(double r) const;

  // Geodesic-gauge sample; Nariai accepts the closed interval [0, pi].
  WarpedSample sample(double r) const;

 private:
  int n_;
  CylinderKind kind_;
  CrossSection cross_;
};

CurvatureSample curvature_at(const CylinderGeometry& geom, double r);
CurvatureSample finite_difference_curvature(const CylinderGeometry& geom, double r, double h);
StaticResidual static_residual(const CylinderGeometry& geom, double r);

using Geometry = std::variant<RadialGeometry, CylinderGeometry>;

enum class ExtremumKind { Max, Min, Sup };
std::string_view to_string(ExtremumKind kind);

struct HorizonSeed {
  std::string label;
  double radius;        // coordinate r of the horizon
  double areal_radius;  // phi at the horizon
  double grad_u;        // |Du| on the horizon
};

struct ModelData {
  ModelTriple triple;
  Geometry geometry;
  int lambda_sign = 0;
  double u_extremum = 1.0;
  ExtremumKind extremum_kind = ExtremumKind::Max;
  std::optional<double> extremum_locus_radius;
  std::vector<HorizonSeed> horizons;
  // How the horizon surface gravity is normalized: "u_max", "u_min", "sup" or "none".
  std::string normalization;

  int dimension() const { return triple.n; }
  const CrossSection& cross() const;
  RadialDomain domain() const;
  const RadialGeometry* radial() const { return std::get_if<RadialGeometry>(&geometry); }
  const CylinderGeometry* cylinder() const { return std::get_if<CylinderGeometry>(&geometry); }

  WarpedSample sample(double r) const;
  double u(double r) const;
  double grad_norm_sq(double r) const;
  // Boundary-bearing Lambda < 0 models: u_min is attained on the horizon.
  bool has_horizon() const { return !horizons.empty(); }
  const HorizonSeed& horizon(std::string_view label) const;
};

// Throws ParameterError when the triple violates its mass or genus range.
ModelData build(const ModelTriple& model);

// Lambda > 0: u_max^2 - u^2 - |Du|^2.
// Lambda < 0: u^2 - c - |Du|^2, c = u_min^2 without boundary, c = k with horizons.
double deficit(const ModelData& model, double r);

// (1 / ((n-2)|S^{n-1}|)) * integral of |Du| over the horizon; Schwarzschild only.
double komar_mass(const ModelData& model);

// Default parameters for every kind in dimension n.
std::vector<ModelTriple> default_catalog(int n);

// Evenly spaced interior points: 10% of the width clear of each end of a bounded
// domain, [lo + 0.1 max(lo, 1), +5] on a half line and [-3, 3] on the whole line.
// The caps keep second-order differences at h = 1e-4 above roundoff.
std::vector<double> interior_grid(const ModelData& model, std::size_t count);

nlohmann::json to_json(const ModelData& model);

}  // namespace staticvac
