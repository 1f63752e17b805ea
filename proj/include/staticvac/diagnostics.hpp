#pragma once

// Pointwise identities and level-set functionals evaluated on radial data:
// Shen's divergence identity, the Bochner identity, U(t), gradient deficits,
// horizon integrals and area bounds, Hawking mass and conformal asymptotics.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "staticvac/model_catalog.hpp"
#include "staticvac/warped_geometry.hpp"

namespace staticvac {

struct ShenPoint {
  double lhs = 0.0;   // div[(1/u)(D|Du|^2 - (2/n) Delta u Du)]
  double rhs = 0.0;   // (2/u)(|D^2 u|^2 - (Delta u)^2 / n)
  double quad = 0.0;  // |D^2 u|^2 - (Delta u)^2 / n
};

ShenPoint shen_point(const WarpedSample& s);

struct ShenResult {
  double residual_max = 0.0;
  double quad_term_min = 0.0;
  double quad_term_max_abs = 0.0;
};

// Throws DomainError when a grid point has u <= kDomainMargin.
ShenResult shen_residual(const RadialGeometry& geom, const std::vector<double>& r_grid);
ShenResult shen_residual(const ModelData& model, const std::vector<double>& r_grid);

// Delta|Du|^2 - 2|D^2 u|^2 - (1/u) <D|Du|^2, Du>.
double bochner_residual(const WarpedSample& s);
double bochner_check(const RadialGeometry& geom, double r);

// Both sides of div[Du / D^(n/2)] = -+ n u deficit / D^(n/2+1), where
// D = u_ref^2 - u^2 (lambda_sign > 0) or u^2 - u_ref^2 (lambda_sign < 0).
struct DivergenceSides {
  double lhs = 0.0;
  double rhs = 0.0;
};
DivergenceSides divergence_identity(const WarpedSample& s, int lambda_sign, double u_ref);

enum class Branch { Outer, Inner };
std::string_view to_string(Branch branch);

// A radial interval on which u is strictly monotone, with the data U(t) needs.
struct LevelSetProblem {
  std::function<WarpedSample(double)> sample;
  std::function<double(double)> u;
  int n = 3;
  int lambda_sign = 1;
  double volume = 0.0;
  double u_ref = 1.0;  // u_max for lambda_sign > 0, u_min for lambda_sign < 0
  double lo = 0.0;     // coordinate interval of the branch, may be infinite
  double hi = 0.0;
};

// Branch of a catalog model; Inner is r <= MAX/MIN locus, Outer r >= locus.
LevelSetProblem branch_problem(const ModelData& model, Branch branch);
LevelSetProblem branch_problem(const RadialGeometry& geom, double u_ref, double lo, double hi);

struct LevelSetSample {
  double t;
  double radius;
  double area;
  double grad_u;
};

LevelSetSample level_set(const LevelSetProblem& p, double t);

std::vector<std::pair<double, double>> U_function(const LevelSetProblem& p,
                                                  const std::vector<double>& t_grid);
std::vector<std::pair<double, double>> U_function(const ModelData& model, Branch branch,
                                                  const std::vector<double>& t_grid);

// Evenly spaced t strictly inside the branch's u-range (Lambda < 0: up to t_span above u_ref).
std::vector<double> default_t_grid(const LevelSetProblem& p, std::size_t count,
                                   double t_span = 10.0);

struct DeficitRange {
  double deficit_min;
  double deficit_max;
};
DeficitRange gradient_deficit_scan(const ModelData& model, const std::vector<double>& r_grid);

struct BghIntegral {
  double value;
  bool lambda_sign_mismatch;  // the inequality is a Lambda > 0 statement
};
BghIntegral bgh_integral(const ModelData& model, std::string_view label);

struct AreaCheck {
  std::string label;
  double area;
  double bound;
  double slack;  // bound - area for upper bounds, area - bound for lower bounds
  bool satisfied;
};

// Lambda > 0, n = 3: each horizon against 4 pi r_+-(mu)^2 by type and against 4 pi.
std::vector<AreaCheck> area_bounds(const ModelData& model, double mu);

// r_-(mu) and r_+(mu) on [0, m_max], with r_-(0) = 0 and r_+(0) = 1.
double sds_radius_inner(int n, double mu);
double sds_radius_outer(int n, double mu);

// n = 3, Lambda < 0 radial models with a genus-carrying cross-section.
double hawking_mass(const ModelData& model, double t);

struct ChruscielSimonResult {
  double lhs;
  double rhs;
  double slack;  // lhs - rhs
  bool satisfied;
};
ChruscielSimonResult chrusciel_simon_area(const ModelData& model, double mu, int genus_inf);

// u^2 - k - |Du|^2 on the conformally compact kinds.
double conformal_deficit(const ModelData& model, double r);

struct DiagnosticsReport {
  std::string model;
  double static_residual_max = 0.0;
  double fd_residual_max = 0.0;
  double shen_residual_max = 0.0;
  double quad_term_min = 0.0;
  std::vector<std::pair<double, double>> U_samples;
  std::string U_branch;
  std::optional<double> deficit_min;
  std::optional<double> deficit_max;
  std::optional<double> bgh_integral;
  std::vector<AreaCheck> area_checks;
  std::vector<std::string> breaches;
  std::vector<std::string> notes;
};

struct DiagnosticsOptions {
  std::size_t grid_points = 100;
  std::size_t t_points = 50;
  double fd_step = 1e-4;
};

DiagnosticsReport diagnose(const ModelData& model, const DiagnosticsOptions& opts = {});

nlohmann::json to_json(const AreaCheck& check);
nlohmann::json to_json(const DiagnosticsReport& report);

}  // namespace staticvac
