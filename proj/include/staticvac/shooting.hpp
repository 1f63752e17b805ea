#pragma once

// Radial static equations in geodesic gauge g = ds^2 + phi(s)^2 g_cross,
// integrated by fixed-step RK4 from a horizon (u = 0) toward the extremum of u.

#include <string>
#include <vector>

#include "json.hpp"

namespace staticvac {

struct ShootingState {
  double s = 0.0;
  double u = 0.0;
  double u_dot = 0.0;
  double phi = 0.0;
  double phi_dot = 0.0;
  double constraint = 0.0;
};

struct ShootingConfig {
  int n = 3;
  int lambda_sign = 1;
  int k = 1;  // cross-section curvature sign
  double r0 = 1.0;
  double kappa = 1.0;
  double step = 1e-4;
  double s_max = 10.0;
  double tolerance = 1e-6;  // constraint drift beyond this is flagged
};

struct StateDerivative {
  double u = 0.0;
  double u_dot = 0.0;
  double phi = 0.0;
  double phi_dot = 0.0;
};

// u'' = -s n u - (n-1)(phi'/phi) u',  phi'' = u' phi' / u.
StateDerivative reduced_rhs(const ShootingState& x, int n, int lambda_sign);

// s n (n-1) + 2(n-1) u' phi' / (u phi) + (n-1)(n-2)(phi'^2 - k) / phi^2
double constraint_value(const ShootingState& x, int n, int lambda_sign, int k);
// |constraint| over the sum of the magnitudes of its terms. The raw value
// carries a 1/phi^2 term that is pure rounding near a regular center.
double relative_constraint_drift(const ShootingState& x, int n, int lambda_sign, int k);

// Series data at s = step / 10 matching the regular horizon expansion.
ShootingState horizon_series_start(const ShootingConfig& cfg);

struct Trajectory {
  std::vector<ShootingState> states;
  bool event_found = false;  // u' reached zero
  ShootingState event;       // the state at u' = 0 when found
  double max_constraint_drift = 0.0;
  bool drift_flagged = false;
};

// Throws ParameterError for invalid configs and DomainError when u <= 0 mid-run.
Trajectory integrate(const ShootingConfig& cfg);

struct ShotSummary {
  double mass;
  std::string horizon;  // "inner" / "outer"
  double r0;
  double kappa;
  double u_max_numeric;
  double u_max_closed;
  double locus_numeric;
  double locus_closed;
  double surface_gravity_numeric;  // kappa / u_max_numeric
  double surface_gravity_closed;   // k_+ or k_-
  double profile_deviation;        // max |u - sqrt(W(phi))|, |s - S(phi)| along the shot
  double constraint_drift;
};

struct BirkhoffReport {
  int n = 3;
  std::vector<ShotSummary> shots;
  double max_deviation = 0.0;
  bool drift_flagged = false;
};

// Default step at horizon radius r0: min(1e-4, 1e-3 r0).
double default_shooting_step(double r0);

// Config for a shot from the inner or outer Schwarzschild-de Sitter horizon
// (r0 = 1 when m = 0), with kappa = |W'(r0)|/2 and step 0 meaning the default.
ShootingConfig horizon_shot_config(int n, double m, bool outer, double step);

// Shots from both Schwarzschild-de Sitter horizons (and r0 = 1 when m = 0).
ShotSummary shoot_from_horizon(int n, double m, bool outer, double step);
BirkhoffReport birkhoff_check(int n, const std::vector<double>& m_grid, double step = 0.0);

nlohmann::json to_json(const BirkhoffReport& report);

}  // namespace staticvac
