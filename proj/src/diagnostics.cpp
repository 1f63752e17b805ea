#include "staticvac/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "staticvac/errors.hpp"
#include "staticvac/horizon_mass.hpp"
#include "staticvac/numerics.hpp"

namespace staticvac {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

ShenPoint shen_point(const WarpedSample& s) {
  const double n = s.n;
  const double a = s.phi_s / s.phi;
  const double a_s = s.phi_ss / s.phi - a * a;
  const double g_s = 2.0 * s.u_s * s.u_ss;
  const double g_ss = 2.0 * (s.u_ss * s.u_ss + s.u_s * s.u_sss);
  const double lap = s.u_ss + (n - 1) * a * s.u_s;
  const double lap_s = s.u_sss + (n - 1) * (a_s * s.u_s + a * s.u_ss);
  const double y = g_s - (2.0 / n) * lap * s.u_s;
  const double y_s = g_ss - (2.0 / n) * (lap_s * s.u_s + lap * s.u_ss);
  const double x = y / s.u;
  const double x_s = y_s / s.u - y * s.u_s / (s.u * s.u);

  ShenPoint p;
  p.lhs = x_s + (n - 1) * a * x;
  const double traceless = s.u_ss - a * s.u_s;  // hess_radial - hess_tangential
  p.quad = (n - 1) / n * traceless * traceless;
  p.rhs = 2.0 * p.quad / s.u;
  return p;
}

namespace {

template <class Sampler>
ShenResult shen_scan(const Sampler& sample, const std::vector<double>& r_grid) {
  ShenResult out;
  out.quad_term_min = kInf;
  for (double r : r_grid) {
    const auto s = sample(r);
    if (!(s.u > kDomainMargin)) {
      throw DomainError("Shen residual grid touches u = 0 at r = " + fmt_double(r));
    }
    const auto p = shen_point(s);
    out.residual_max = std::max(out.residual_max, std::abs(p.lhs - p.rhs));
    out.quad_term_min = std::min(out.quad_term_min, p.quad);
    out.quad_term_max_abs = std::max(out.quad_term_max_abs, std::abs(p.quad));
  }
  if (r_grid.empty()) out.quad_term_min = 0.0;
  return out;
}

}  // namespace

ShenResult shen_residual(const RadialGeometry& geom, const std::vector<double>& r_grid) {
  return shen_scan([&](double r) { return geom.sample(r); }, r_grid);
}

ShenResult shen_residual(const ModelData& model, const std::vector<double>& r_grid) {
  return shen_scan([&](double r) { return model.sample(r); }, r_grid);
}

double bochner_residual(const WarpedSample& s) {
  const double n = s.n;
  const double a = s.phi_s / s.phi;
  const double g_s = 2.0 * s.u_s * s.u_ss;
  const double g_ss = 2.0 * (s.u_ss * s.u_ss + s.u_s * s.u_sss);
  const double lap_g = g_ss + (n - 1) * a * g_s;
  const double hess_sq = s.u_ss * s.u_ss + (n - 1) * (a * s.u_s) * (a * s.u_s);
  return lap_g - 2.0 * hess_sq - g_s * s.u_s / s.u;
}

double bochner_check(const RadialGeometry& geom, double r) {
  const auto s = geom.sample(r);
  if (!(s.u > kDomainMargin)) throw DomainError("Bochner check needs u > 0");
  return bochner_residual(s);
}

DivergenceSides divergence_identity(const WarpedSample& s, int lambda_sign, double u_ref) {
  if (lambda_sign == 0) throw UnsupportedError("divergence identity needs Lambda != 0");
  const double n = s.n;
  const double a = s.phi_s / s.phi;
  const double sg = lambda_sign > 0 ? 1.0 : -1.0;
  const double d = sg * (u_ref * u_ref - s.u * s.u);
  if (!(d > 0.0)) throw DomainError("divergence identity evaluated on the extremum locus");
  const double d_s = -sg * 2.0 * s.u * s.u_s;
  const double dn = std::pow(d, 0.5 * n);
  const double flux = s.u_s / dn;
  const double flux_s = s.u_ss / dn - 0.5 * n * s.u_s * d_s / (dn * d);
  DivergenceSides out;
  out.lhs = flux_s + (n - 1) * a * flux;
  out.rhs = -sg * n * s.u * (d - s.u_s * s.u_s) / (dn * d);
  return out;
}

std::string_view to_string(Branch branch) {
  return branch == Branch::Outer ? "outer" : "inner";
}

LevelSetProblem branch_problem(const ModelData& model, Branch branch) {
  if (model.lambda_sign == 0) {
    throw UnsupportedError("U(t) is defined only for Lambda != 0");
  }
  LevelSetProblem p;
  p.sample = [&model](double r) { return model.sample(r); };
  p.u = [&model](double r) { return model.u(r); };
  p.n = model.dimension();
  p.lambda_sign = model.lambda_sign;
  p.volume = model.cross().volume;
  p.u_ref = model.u_extremum;
  const auto dom = model.domain();
  const double locus = model.extremum_locus_radius.value_or(dom.lo);
  if (branch == Branch::Inner) {
    p.lo = dom.lo;
    p.hi = locus;
  } else {
    p.lo = locus;
    p.hi = dom.hi;
  }
  if (!(p.hi > p.lo)) {
    throw DomainError(std::string(to_string(model.triple.kind)) + " has no " +
                      std::string(to_string(branch)) + " branch");
  }
  return p;
}

LevelSetProblem branch_problem(const RadialGeometry& geom, double u_ref, double lo, double hi) {
  if (geom.lambda_sign() == 0) throw UnsupportedError("U(t) is defined only for Lambda != 0");
  if (!(hi > lo)) throw DomainError("empty branch interval");
  LevelSetProblem p;
  p.sample = [&geom](double r) { return geom.sample(r); };
  p.u = [&geom](double r) { return geom.u(r); };
  p.n = geom.dimension();
  p.lambda_sign = geom.lambda_sign();
  p.volume = geom.cross().volume;
  p.u_ref = u_ref;
  p.lo = lo;
  p.hi = hi;
  return p;
}

LevelSetSample level_set(const LevelSetProblem& p, double t) {
  const bool in_range = p.lambda_sign > 0 ? (t > 0.0 && t < p.u_ref) : (t > p.u_ref);
  if (!in_range || !std::isfinite(t)) {
    throw DomainError("level t = " + fmt_double(t) + " outside the potential's range");
  }
  double lo = p.lo, hi = p.hi;
  // Replace infinite ends by points beyond the level.
  if (std::isinf(hi)) {
    hi = std::max(1.0, std::isinf(lo) ? 1.0 : 2.0 * std::abs(lo) + 1.0);
    for (int i = 0; i < 2000 && !(p.u(hi) > t); ++i) hi *= 2.0;
  }
  if (std::isinf(lo)) {
    lo = std::min(-1.0, -2.0 * std::abs(hi) - 1.0);
    for (int i = 0; i < 2000 && !(p.u(lo) > t); ++i) lo *= 2.0;
  }
  const double r = numerics::bisect([&](double x) { return p.u(x) - t; }, lo, hi);
  const auto s = p.sample(r);
  LevelSetSample out;
  out.t = t;
  out.radius = r;
  out.area = p.volume * std::pow(s.phi, p.n - 1);
  out.grad_u = std::abs(s.u_s);
  return out;
}

std::vector<std::pair<double, double>> U_function(const LevelSetProblem& p,
                                                  const std::vector<double>& t_grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    const auto ls = level_set(p, t);
    const double gap = std::abs(p.u_ref * p.u_ref - t * t);
    out.emplace_back(t, ls.area * ls.grad_u / std::pow(gap, 0.5 * p.n));
  }
  return out;
}

std::vector<std::pair<double, double>> U_function(const ModelData& model, Branch branch,
                                                  const std::vector<double>& t_grid) {
  return U_function(branch_problem(model, branch), t_grid);
}

std::vector<double> default_t_grid(const LevelSetProblem& p, std::size_t count, double t_span) {
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = (i + 1.0) / (count + 1.0);
    grid[i] = p.lambda_sign > 0 ? p.u_ref * f : p.u_ref + t_span * f;
  }
  return grid;
}

DeficitRange gradient_deficit_scan(const ModelData& model, const std::vector<double>& r_grid) {
  DeficitRange out{kInf, -kInf};
  for (double r : r_grid) {
    const double d = deficit(model, r);
    out.deficit_min = std::min(out.deficit_min, d);
    out.deficit_max = std::max(out.deficit_max, d);
  }
  return out;
}

BghIntegral bgh_integral(const ModelData& model, std::string_view label) {
  const auto& h = model.horizon(label);
  const int n = model.dimension();
  const double c = (n - 1.0) * (n - 2.0);
  const double phi = h.areal_radius;
  const double r_boundary = c * model.cross().curvature_sign / (phi * phi);
  const double area = model.cross().volume * std::pow(phi, n - 1);
  return {h.grad_u * (r_boundary - c) * area, model.lambda_sign <= 0};
}

double sds_radius_inner(int n, double mu) {
  const double mm = m_max(n);
  if (!(mu >= 0.0 && mu <= mm)) throw DomainError("mu must lie in [0, m_max]");
  if (mu == 0.0) return 0.0;
  return horizon_radii(n, mu, 1, 1).radii.front();
}

double sds_radius_outer(int n, double mu) {
  const double mm = m_max(n);
  if (!(mu >= 0.0 && mu <= mm)) throw DomainError("mu must lie in [0, m_max]");
  if (mu == 0.0) return 1.0;
  return horizon_radii(n, mu, 1, 1).radii.back();
}

std::vector<AreaCheck> area_bounds(const ModelData& model, double mu) {
  const int n = model.dimension();
  if (n != 3) throw DomainError("area bounds are stated for n = 3");
  if (model.lambda_sign <= 0) throw UnsupportedError("area bounds need Lambda > 0");
  if (!(mu >= 0.0 && mu <= m_max(n))) throw DomainError("mu must lie in [0, m_max]");
  const double four_pi = 4.0 * numerics::kPi;
  std::vector<AreaCheck> out;
  for (const auto& h : model.horizons) {
    const double area = model.cross().volume * std::pow(h.areal_radius, n - 1);
    const auto type = classify(h.grad_u / model.u_extremum, n);
    double r_bound = 0.0;
    switch (type) {
      case HorizonType::Cosmological: r_bound = sds_radius_outer(n, mu); break;
      case HorizonType::BlackHole: r_bound = sds_radius_inner(n, mu); break;
      case HorizonType::Cylindrical: r_bound = std::sqrt((n - 2.0) / n); break;
    }
    const double bound = four_pi * r_bound * r_bound;
    const double tol = 1e-12 * std::max(1.0, bound);
    out.push_back({h.label + ":" + std::string(to_string(type)), area, bound, bound - area,
                   bound - area >= -tol});
    out.push_back({h.label + ":zero_mass", area, four_pi, four_pi - area,
                   four_pi - area >= -1e-12 * four_pi});
  }
  return out;
}

double hawking_mass(const ModelData& model, double t) {
  if (model.dimension() != 3) throw DomainError("the Hawking mass is defined for n = 3");
  const auto* geom = model.radial();
  if (model.lambda_sign >= 0 || geom == nullptr) {
    throw UnsupportedError("the Hawking mass is evaluated on Lambda < 0 radial models");
  }
  const auto genus = model.cross().surface_genus();
  if (!genus) throw UnsupportedError("the cross-section carries no genus");
  const auto ls = level_set(branch_problem(model, Branch::Outer), t);
  const double r = ls.radius;
  const double h_sq = 4.0 * geom->W(r) / (r * r);
  const double sixteen_pi = 16.0 * numerics::kPi;
  return std::sqrt(ls.area / sixteen_pi) * (1.0 - *genus - (h_sq - 4.0) * ls.area / sixteen_pi);
}

ChruscielSimonResult chrusciel_simon_area(const ModelData& model, double mu, int genus_inf) {
  if (model.dimension() != 3 || model.triple.kind != ModelKind::KottlerHyperbolic) {
    throw UnsupportedError("the Chrusciel-Simon bound applies to n = 3 hyperbolic Kottler data");
  }
  const auto genus = model.cross().genus;
  if (!genus) throw ParameterError("the model needs a genus");
  if (genus_inf < 2) throw ParameterError("genus of the conformal infinity must be >= 2");
  if (mu > 0.0) throw DomainError("mu must be <= 0 (surface gravity at most 1)");
  if (!(mu > -m_max(3))) throw DomainError("mu must exceed -m_max");
  const double r_mu = horizon_radii(3, mu, -1, -1).radii.back();
  const auto& h = model.horizons.front();
  const double lhs = model.cross().volume * h.areal_radius * h.areal_radius;
  const double rhs =
      (*genus - 1.0) / (genus_inf - 1.0) * 4.0 * numerics::kPi * r_mu * r_mu;
  return {lhs, rhs, lhs - rhs, lhs - rhs >= -1e-12 * rhs};
}

double conformal_deficit(const ModelData& model, double r) {
  switch (model.triple.kind) {
    case ModelKind::AntiDeSitter:
    case ModelKind::SchwarzschildAdS:
    case ModelKind::KottlerFlat:
    case ModelKind::KottlerHyperbolic:
      break;
    default:
      throw UnsupportedError("conformal deficit needs a conformally compact Lambda < 0 model");
  }
  return deficit(model, r);
}

// ---------------------------------------------------------------------------

namespace {

bool zero_mass_kind(ModelKind k) {
  return k == ModelKind::DeSitter || k == ModelKind::AntiDeSitter;
}

}  // namespace

DiagnosticsReport diagnose(const ModelData& model, const DiagnosticsOptions& opts) {
  DiagnosticsReport rep;
  rep.model = std::string(to_string(model.triple.kind));
  const int n = model.dimension();
  const auto grid = interior_grid(model, opts.grid_points);
  auto breach = [&](const std::string& what) { rep.breaches.push_back(what); };

  for (double r : grid) {
    StaticResidual closed, fd;
    if (const auto* g = model.radial()) {
      closed = static_residual(*g, r);
      fd = static_residual(finite_difference_curvature(*g, r, opts.fd_step), g->u(r), n,
                           model.lambda_sign);
    } else {
      const auto* c = model.cylinder();
      closed = static_residual(*c, r);
      fd = static_residual(finite_difference_curvature(*c, r, opts.fd_step), c->u(r), n,
                           model.lambda_sign);
    }
    rep.static_residual_max = std::max(rep.static_residual_max, closed.max_abs());
    rep.fd_residual_max = std::max(rep.fd_residual_max, fd.max_abs());
  }
  if (rep.static_residual_max >= 1e-10) breach("static residual " + fmt_double(rep.static_residual_max));
  if (rep.fd_residual_max >= 1e-5) breach("finite-difference residual " + fmt_double(rep.fd_residual_max));

  const auto shen = shen_residual(model, grid);
  rep.shen_residual_max = shen.residual_max;
  rep.quad_term_min = shen.quad_term_min;
  if (shen.residual_max >= 1e-9) breach("Shen residual " + fmt_double(shen.residual_max));
  if (shen.quad_term_min < -1e-12) breach("negative Shen quadratic term");
  if (zero_mass_kind(model.triple.kind) && shen.quad_term_max_abs >= 1e-12) {
    breach("Shen quadratic term nonzero on a space form");
  }

  if (model.lambda_sign != 0) {
    const auto p = branch_problem(model, Branch::Outer);
    rep.U_branch = "outer";
    rep.U_samples = U_function(p, default_t_grid(p, opts.t_points));
    if (zero_mass_kind(model.triple.kind)) {
      double lo = kInf, hi = -kInf;
      for (const auto& [t, v] : rep.U_samples) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      if ((hi - lo) >= 1e-9 * hi) breach("U(t) not constant on a zero-mass model");
    }

    const auto d = gradient_deficit_scan(model, grid);
    rep.deficit_min = d.deficit_min;
    rep.deficit_max = d.deficit_max;
    const double spread = std::max(std::abs(d.deficit_min), std::abs(d.deficit_max));
    if (zero_mass_kind(model.triple.kind) && spread >= 1e-12) breach("deficit not zero");
    if (!zero_mass_kind(model.triple.kind) && spread < 1e-6) breach("deficit vanishes off the rigid case");
  } else {
    rep.notes.push_back("U(t) and the gradient deficit are not defined for Lambda = 0");
  }

  if (model.lambda_sign > 0 && !model.horizons.empty()) {
    const auto& label = model.horizons.back().label;
    const auto bgh = bgh_integral(model, label);
    rep.bgh_integral = bgh.value;
    if (bgh.value < -1e-12) breach("BGH integral negative on " + label);
    if (n == 3) {
      for (const auto& h : model.horizons) {
        const auto vm = virtual_mass({h.grad_u / model.u_extremum}, n);
        for (auto& check : area_bounds(model, vm.mass)) {
          if (check.label.rfind(h.label + ":", 0) != 0) continue;
          if (!check.satisfied) breach("area bound " + check.label);
          rep.area_checks.push_back(std::move(check));
        }
      }
    }
  }

  if (model.triple.kind == ModelKind::Schwarzschild) {
    const double km = komar_mass(model);
    rep.notes.push_back("komar mass " + fmt_double(km));
    if (std::abs(km - *model.triple.mass) > 1e-12 * std::max(1.0, *model.triple.mass)) {
      breach("Komar mass differs from m");
    }
  }

  if (n == 3 && model.lambda_sign < 0 && model.radial() && model.cross().surface_genus()) {
    double lo = kInf, hi = -kInf;
    const auto p = branch_problem(model, Branch::Outer);
    for (double t : default_t_grid(p, 20)) {
      const double mh = hawking_mass(model, t);
      lo = std::min(lo, mh);
      hi = std::max(hi, mh);
    }
    rep.notes.push_back("Hawking mass " + fmt_double(hi));
    if (hi - lo >= 1e-8) breach("Hawking mass not constant along level sets");
  }

  switch (model.triple.kind) {
    case ModelKind::AntiDeSitter:
    case ModelKind::SchwarzschildAdS:
    case ModelKind::KottlerFlat:
    case ModelKind::KottlerHyperbolic: {
      const double d1 = conformal_deficit(model, 100.0);
      const double d2 = conformal_deficit(model, 200.0);
      if (model.triple.kind == ModelKind::AntiDeSitter) {
        if (std::max(std::abs(d1), std::abs(d2)) > 1e-9) breach("AdS conformal deficit nonzero");
      } else {
        const double ratio = std::abs(d2 / d1);
        const double expected = std::pow(2.0, 2 - n);
        if (std::abs(ratio / expected - 1.0) > 0.1) breach("conformal deficit decay rate");
      }
      break;
    }
    case ModelKind::AntiNariai: {
      double worst = 0.0;
      for (double r : grid) {
        const auto s = model.sample(r);
        worst = std::max(worst, std::abs(s.u * s.u - 1.0 - s.u_s * s.u_s / n));
      }
      if (worst >= 1e-12) breach("anti-Nariai pointwise identity");
      break;
    }
    default:
      break;
  }
  return rep;
}

nlohmann::json to_json(const AreaCheck& c) {
  return {{"label", c.label},
          {"area", c.area},
          {"bound", c.bound},
          {"slack", c.slack},
          {"satisfied", c.satisfied}};
}

nlohmann::json to_json(const DiagnosticsReport& r) {
  nlohmann::json j;
  j["model"] = r.model;
  j["static_residual_max"] = r.static_residual_max;
  j["fd_residual_max"] = r.fd_residual_max;
  j["shen_residual_max"] = r.shen_residual_max;
  j["quad_term_min"] = r.quad_term_min;
  j["U_branch"] = r.U_branch;
  j["U_samples"] = nlohmann::json::array();
  for (const auto& [t, v] : r.U_samples) j["U_samples"].push_back({t, v});
  j["deficit_min"] = r.deficit_min ? nlohmann::json(*r.deficit_min) : nlohmann::json(nullptr);
  j["deficit_max"] = r.deficit_max ? nlohmann::json(*r.deficit_max) : nlohmann::json(nullptr);
  j["bgh_integral"] = r.bgh_integral ? nlohmann::json(*r.bgh_integral) : nlohmann::json(nullptr);
  j["area_checks"] = nlohmann::json::array();
  for (const auto& c : r.area_checks) j["area_checks"].push_back(to_json(c));
  j["breaches"] = r.breaches;
  j["notes"] = r.notes;
  return j;
}

}  // namespace staticvac
