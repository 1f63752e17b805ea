#include "staticvac/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "staticvac/errors.hpp"
#include "staticvac/horizon_mass.hpp"
#include "staticvac/model_catalog.hpp"
#include "staticvac/numerics.hpp"

namespace staticvac {

StateDerivative reduced_rhs(const ShootingState& x, int n, int lambda_sign) {
  if (!(x.u > 0.0)) throw DomainError("u <= 0 during integration: horizon crossed");
  StateDerivative d;
  d.u = x.u_dot;
  d.u_dot = -lambda_sign * n * x.u - (n - 1) * (x.phi_dot / x.phi) * x.u_dot;
  d.phi = x.phi_dot;
  d.phi_dot = x.u_dot * x.phi_dot / x.u;
  return d;
}

double constraint_value(const ShootingState& x, int n, int lambda_sign, int k) {
  return lambda_sign * n * (n - 1.0) + 2.0 * (n - 1) * x.u_dot * x.phi_dot / (x.u * x.phi) +
         (n - 1.0) * (n - 2.0) * (x.phi_dot * x.phi_dot - k) / (x.phi * x.phi);
}

double relative_constraint_drift(const ShootingState& x, int n, int lambda_sign, int k) {
  const double scale = std::abs(lambda_sign * n * (n - 1.0)) +
                       std::abs(2.0 * (n - 1) * x.u_dot * x.phi_dot / (x.u * x.phi)) +
                       (n - 1.0) * (n - 2.0) * (x.phi_dot * x.phi_dot + std::abs(k)) / (x.phi * x.phi);
  return std::abs(x.constraint) / scale;
}

namespace {

void validate(const ShootingConfig& c) {
  if (c.n < 3) throw ParameterError("dimension must be at least 3");
  if (c.lambda_sign != 1 && c.lambda_sign != -1) {
    throw ParameterError("shooting needs lambda_sign = +1 or -1");
  }
  if (c.k < -1 || c.k > 1) throw ParameterError("k must be -1, 0 or 1");
  if (!(c.r0 > 0.0)) throw ParameterError("r0 must be positive");
  if (c.lambda_sign == 1 && c.k == 1 && !(c.r0 <= 1.0)) {
    throw ParameterError("spherical Lambda > 0 horizons have r0 in (0, 1]");
  }
  if (!(c.kappa > 0.0)) throw ParameterError("kappa must be positive");
  if (!(c.step > 0.0) || c.step < 1e-14) throw ParameterError("step must be positive");
  if (!(c.s_max > c.step / 10.0)) throw ParameterError("s_max must exceed the series start");
}

ShootingState axpy(const ShootingState& x, double h, const StateDerivative& d) {
  ShootingState y = x;
  y.s += h;
  y.u += h * d.u;
  y.u_dot += h * d.u_dot;
  y.phi += h * d.phi;
  y.phi_dot += h * d.phi_dot;
  return y;
}

ShootingState rk4_step(const ShootingState& x, double h, int n, int sign, int k) {
  const auto k1 = reduced_rhs(x, n, sign);
  const auto k2 = reduced_rhs(axpy(x, 0.5 * h, k1), n, sign);
  const auto k3 = reduced_rhs(axpy(x, 0.5 * h, k2), n, sign);
  const auto k4 = reduced_rhs(axpy(x, h, k3), n, sign);
  ShootingState y = x;
  y.s = x.s + h;
  y.u += h / 6.0 * (k1.u + 2 * k2.u + 2 * k3.u + k4.u);
  y.u_dot += h / 6.0 * (k1.u_dot + 2 * k2.u_dot + 2 * k3.u_dot + k4.u_dot);
  y.phi += h / 6.0 * (k1.phi + 2 * k2.phi + 2 * k3.phi + k4.phi);
  y.phi_dot += h / 6.0 * (k1.phi_dot + 2 * k2.phi_dot + 2 * k3.phi_dot + k4.phi_dot);
  y.constraint = constraint_value(y, n, sign, k);
  return y;
}

}  // namespace

ShootingState horizon_series_start(const ShootingConfig& cfg) {
  validate(cfg);
  const double n = cfg.n;
  const double e = cfg.step / 10.0;
  const double c = (n - 2.0) * cfg.k / (2.0 * cfg.r0) - cfg.lambda_sign * n * cfg.r0 / 2.0;
  const double a = -(cfg.lambda_sign * n + (n - 1.0) * c / cfg.r0) / 6.0;
  const double d = 6.0 * a * c;
  ShootingState x;
  x.s = e;
  x.u = cfg.kappa * (e + a * e * e * e);
  x.u_dot = cfg.kappa * (1.0 + 3.0 * a * e * e);
  x.phi = cfg.r0 + c * e * e / 2.0 + d * e * e * e * e / 24.0;
  x.phi_dot = c * e + d * e * e * e / 6.0;
  x.constraint = constraint_value(x, cfg.n, cfg.lambda_sign, cfg.k);
  return x;
}

Trajectory integrate(const ShootingConfig& cfg) {
  validate(cfg);
  Trajectory tr;
  auto x = horizon_series_start(cfg);
  tr.states.push_back(x);
  auto track = [&](const ShootingState& y) {
    tr.max_constraint_drift =
        std::max(tr.max_constraint_drift, relative_constraint_drift(y, cfg.n, cfg.lambda_sign, cfg.k));
  };
  track(x);
  while (x.s < cfg.s_max) {
    const double h = std::min(cfg.step, cfg.s_max - x.s);
    if (h <= 1e-15 * std::max(1.0, cfg.s_max)) break;
    if (x.phi_dot < 0.0 && x.phi + 2.0 * h * x.phi_dot <= 0.0 && x.u_dot > 0.0) {
      // Regular center ahead: the stages would sample phi ~ 0. Close the last
      // gap d = phi / |phi'| with u = u_c (1 - d^2 / 2), phi = d.
      const double d = x.phi / -x.phi_dot;
      tr.event = x;
      tr.event.s = x.s + d;
      tr.event.u = x.u + 0.5 * x.u_dot * d;
      tr.event.u_dot = 0.0;
      tr.event.phi = 0.0;
      tr.event_found = true;
      tr.states.push_back(tr.event);
      break;
    }
    auto y = rk4_step(x, h, cfg.n, cfg.lambda_sign, cfg.k);
    if (x.u_dot > 0.0 && y.u_dot <= 0.0) {
      const ShootingState base = x;
      const double theta = numerics::bisect(
          [&](double t) { return rk4_step(base, t, cfg.n, cfg.lambda_sign, cfg.k).u_dot; }, 0.0,
          h, {1e-12, 0.0, 200});
      tr.event = rk4_step(base, theta, cfg.n, cfg.lambda_sign, cfg.k);
      tr.event_found = true;
      tr.states.push_back(tr.event);
      track(tr.event);
      break;
    }
    x = y;
    tr.states.push_back(x);
    track(x);
  }
  tr.drift_flagged = tr.max_constraint_drift > cfg.tolerance;
  return tr;
}

double default_shooting_step(double r0) { return std::min(1e-4, 1e-3 * r0); }

namespace {

// Arclength from the horizon r0 to areal radius r along the Kottler profile,
// with r = r0 +- tau^2 removing the 1/sqrt(W) endpoint singularity.
double arclength(const PowerSum& w, double r0, double r) {
  if (r == r0) return 0.0;
  const double sigma = r > r0 ? 1.0 : -1.0;
  const double top = std::sqrt(std::abs(r - r0));
  const auto j0 = w.jet(r0);
  const double w0 = j0.value();
  return numerics::integrate(
      [&](double tau) {
        const double delta = sigma * tau * tau;
        double v = 0.0;
        if (std::abs(delta) < 1e-3 * r0) {
          // W - W(r0) from its Taylor polynomial: the direct difference is all rounding here.
          for (std::size_t k = 4; k >= 1; --k) v = (v + j0.coeff(k)) * delta;
        } else {
          v = w(r0 + delta) - w0;
        }
        return tau == 0.0 ? 2.0 / std::sqrt(std::abs(j0.coeff(1))) : 2.0 * tau / std::sqrt(v);
      },
      0.0, top, 1e-12);
}

}  // namespace

ShootingConfig horizon_shot_config(int n, double m, bool outer, double step) {
  const double mm = m_max(n);
  if (!(m >= 0.0 && m < mm)) throw DomainError("shooting needs 0 <= m < m_max");
  if (m == 0.0 && !outer) throw DomainError("de Sitter has no inner horizon");
  const auto w = PowerSum::kottler(n, 1, 1, m);
  const double r0 = m == 0.0 ? 1.0
                    : outer  ? horizon_radii(n, m, 1, 1).radii.back()
                             : horizon_radii(n, m, 1, 1).radii.front();
  ShootingConfig cfg;
  cfg.n = n;
  cfg.lambda_sign = 1;
  cfg.k = 1;
  cfg.r0 = r0;
  // kappa = |W'(r0)| / 2 makes u coincide with sqrt(W(phi)).
  cfg.kappa = 0.5 * std::abs(w.jet(r0).derivative(1));
  cfg.step = step > 0.0 ? step : default_shooting_step(r0);
  cfg.s_max = 10.0;
  return cfg;
}

ShotSummary shoot_from_horizon(int n, double m, bool outer, double step) {
  const auto cfg = horizon_shot_config(n, m, outer, step);
  const auto w = PowerSum::kottler(n, 1, 1, m);
  const double r0 = cfg.r0;
  const double kappa = cfg.kappa;
  const auto tr = integrate(cfg);
  if (!tr.event_found) throw NoRootError("shot never reached the maximum of u");

  ShotSummary out;
  out.mass = m;
  out.horizon = outer ? "outer" : "inner";
  out.r0 = r0;
  out.kappa = kappa;
  out.u_max_numeric = tr.event.u;
  out.u_max_closed = sds_u_max(n, m);
  out.locus_numeric = tr.event.phi;
  out.locus_closed = sds_max_locus(n, m);
  out.surface_gravity_numeric = kappa / tr.event.u;
  out.surface_gravity_closed = m == 0.0 ? 1.0 : (outer ? k_plus(n, m) : k_minus(n, m));
  out.constraint_drift = tr.max_constraint_drift;

  // Compare about 200 evenly spread states with the catalog profile. phi is
  // monotone along the shot, so the catalog arclength accumulates piecewise.
  std::vector<std::size_t> picks;
  const std::size_t stride = std::max<std::size_t>(1, tr.states.size() / 200);
  for (std::size_t i = 0; i < tr.states.size(); i += stride) picks.push_back(i);
  if (picks.back() != tr.states.size() - 1) picks.push_back(tr.states.size() - 1);
  double dev = 0.0;
  double arc = 0.0;
  double prev_phi = r0;
  for (std::size_t idx : picks) {
    const auto& x = tr.states[idx];
    if (prev_phi == r0) {
      arc += arclength(w, r0, x.phi);
    } else if (x.phi != prev_phi) {
      arc += numerics::integrate([&](double r) { return 1.0 / std::sqrt(w(r)); },
                                 std::min(prev_phi, x.phi), std::max(prev_phi, x.phi), 1e-12);
    }
    prev_phi = x.phi;
    dev = std::max(dev, std::abs(x.u - std::sqrt(std::max(w(x.phi), 0.0))));
    dev = std::max(dev, std::abs(x.s - arc));
  }
  out.profile_deviation = dev;
  return out;
}

BirkhoffReport birkhoff_check(int n, const std::vector<double>& m_grid, double step) {
  BirkhoffReport rep;
  rep.n = n;
  const double mm = m_max(n);
  for (double m : m_grid) {
    if (!(m >= 0.0 && m < mm)) throw DomainError("mass grid must lie in [0, m_max)");
    if (m > 0.0) rep.shots.push_back(shoot_from_horizon(n, m, false, step));
    rep.shots.push_back(shoot_from_horizon(n, m, true, step));
  }
  for (const auto& s : rep.shots) {
    rep.max_deviation = std::max(rep.max_deviation, s.profile_deviation);
    rep.drift_flagged = rep.drift_flagged || s.constraint_drift > 1e-6;
  }
  return rep;
}

nlohmann::json to_json(const BirkhoffReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["max_deviation"] = r.max_deviation;
  j["drift_flagged"] = r.drift_flagged;
  j["shots"] = nlohmann::json::array();
  for (const auto& s : r.shots) {
    j["shots"].push_back({{"mass", s.mass},
                          {"horizon", s.horizon},
                          {"r0", s.r0},
                          {"kappa", s.kappa},
                          {"u_max_numeric", s.u_max_numeric},
                          {"u_max_closed", s.u_max_closed},
                          {"locus_numeric", s.locus_numeric},
                          {"locus_closed", s.locus_closed},
                          {"surface_gravity_numeric", s.surface_gravity_numeric},
                          {"surface_gravity_closed", s.surface_gravity_closed},
                          {"profile_deviation", s.profile_deviation},
                          {"constraint_drift", s.constraint_drift}});
  }
  return j;
}

}  // namespace staticvac
