#include "staticvac/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "staticvac/diagnostics.hpp"
#include "staticvac/errors.hpp"
#include "staticvac/horizon_mass.hpp"
#include "staticvac/model_catalog.hpp"
#include "staticvac/report_io.hpp"
#include "staticvac/shooting.hpp"

namespace staticvac::cli {

namespace {

using io::CsvTable;
using io::format_double;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kBreach = 1;
constexpr int kArgError = 2;

std::string opt_str(const std::optional<double>& x) { return x ? format_double(*x) : ""; }

// Where a document goes: --output, else $STATICVAC_OUTPUT_DIR/<name>, else stdout.
std::optional<std::filesystem::path> resolve_output(const CommandConfig& cfg,
                                                    const std::string& stem) {
  if (cfg.output) return cfg.output;
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / (stem + (cfg.format == Format::Json ? ".json" : ".csv"));
  }
  return std::nullopt;
}

json envelope(const CommandConfig& cfg, json data) {
  return {{"version", std::string(kVersion)}, {"config", to_json(cfg)}, {"data", std::move(data)}};
}

void emit(const CommandConfig& cfg, const std::string& stem, const std::string& document,
          std::ostream& out) {
  if (auto path = resolve_output(cfg, stem)) {
    io::write_file(*path, document);
    out << "wrote " << path->string() << '\n';
  } else {
    out << document;
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

int run_models(const CommandConfig& cfg, std::ostream& out) {
  CsvTable table({"kind", "n", "mass", "genus", "lambda_sign", "u_extremum", "extremum_kind",
                  "normalization", "horizon", "radius", "grad_u", "kappa", "type"});
  json models = json::array();
  for (const auto& triple : default_catalog(cfg.n)) {
    const auto m = build(triple);
    models.push_back(to_json(m));
    std::vector<std::string> base{std::string(to_string(triple.kind)),
                                  std::to_string(triple.n),
                                  opt_str(triple.mass),
                                  triple.genus ? std::to_string(*triple.genus) : "",
                                  std::to_string(m.lambda_sign),
                                  format_double(m.u_extremum),
                                  std::string(to_string(m.extremum_kind)),
                                  m.normalization};
    if (m.horizons.empty()) {
      auto row = base;
      row.insert(row.end(), {"", "", "", "", ""});
      table.add_row(std::move(row));
    }
    for (const auto& h : m.horizons) {
      auto row = base;
      const bool normalized = m.lambda_sign > 0;
      const double kappa = normalized ? h.grad_u / m.u_extremum : h.grad_u;
      row.insert(row.end(), {h.label, format_double(h.radius), format_double(h.grad_u),
                             format_double(kappa),
                             normalized ? std::string(to_string(classify(kappa, cfg.n))) : "n/a"});
      table.add_row(std::move(row));
    }
  }
  emit(cfg, "models", cfg.format == Format::Json ? dump(envelope(cfg, models)) : table.str(), out);
  return kOk;
}

// Closed grid on [0, m_max]. The open ends of k_plus and k_minus are filled
// with their limits: k_plus(m_max) = sqrt(n) and k_minus(0) = inf.
int run_figure1(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.points < 2) throw ParameterError("figure1 needs at least 2 points");
  const double mm = m_max(cfg.n);
  CsvTable table({"m", "k_plus", "k_minus"});
  json rows = json::array();
  for (std::size_t i = 0; i < cfg.points; ++i) {
    const bool last = i + 1 == cfg.points;
    const double m = last ? mm : mm * static_cast<double>(i) / static_cast<double>(cfg.points - 1);
    const double kp = last ? std::sqrt(static_cast<double>(cfg.n)) : k_plus(cfg.n, m);
    const double km = i == 0 ? std::numeric_limits<double>::infinity() : k_minus(cfg.n, m);
    table.add_row(std::vector<double>{m, kp, km});
    rows.push_back({{"m", m}, {"k_plus", kp}, {"k_minus", std::isinf(km) ? json(nullptr) : json(km)}});
  }
  emit(cfg, "figure1", cfg.format == Format::Json ? dump(envelope(cfg, rows)) : table.str(), out);
  return kOk;
}

int run_classify(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.kappas.empty()) throw ParameterError("classify needs --kappas");
  const double tol = cfg.tol.value_or(default_classification_tol(cfg.n));
  CsvTable table({"kappa", "type"});
  json rows = json::array();
  for (double k : cfg.kappas) {
    if (!(k >= 0.0)) throw ParameterError("surface gravities must be nonnegative");
    const auto type = std::string(to_string(classify(k, cfg.n, tol)));
    table.add_row({format_double(k), type});
    rows.push_back({{"kappa", k}, {"type", type}});
  }
  emit(cfg, "classify", cfg.format == Format::Json ? dump(envelope(cfg, rows)) : table.str(), out);
  return kOk;
}

int run_virtual_mass(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.kappas.empty()) throw ParameterError("virtual-mass needs --kappas");
  const auto r = cfg.tol ? virtual_mass(cfg.kappas, cfg.n, *cfg.tol)
                         : virtual_mass(cfg.kappas, cfg.n);
  CsvTable table({"mass", "region", "kappa_max", "extrapolated"});
  table.add_row({format_double(r.mass), std::string(to_string(r.region_kind)),
                 format_double(r.kappa_max), r.extrapolated ? "true" : "false"});
  json data = {{"mass", r.mass},
               {"region", to_string(r.region_kind)},
               {"kappa_max", r.kappa_max},
               {"extrapolated", r.extrapolated}};
  emit(cfg, "virtual_mass", cfg.format == Format::Json ? dump(envelope(cfg, data)) : table.str(),
       out);
  return kOk;
}

int run_verify(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  CsvTable table({"model", "static_residual_max", "fd_residual_max", "shen_residual_max",
                  "quad_term_min", "deficit_min", "deficit_max", "bgh_integral", "breaches"});
  json reports = json::array();
  std::size_t breaches = 0;
  for (const auto& triple : default_catalog(cfg.n)) {
    const auto model = build(triple);
    const auto rep = diagnose(model);
    reports.push_back(to_json(rep));
    breaches += rep.breaches.size();
    for (const auto& b : rep.breaches) err << "breach: " << rep.model << ": " << b << '\n';
    std::string joined;
    for (const auto& b : rep.breaches) joined += (joined.empty() ? "" : "; ") + b;
    table.add_row({rep.model, format_double(rep.static_residual_max),
                   format_double(rep.fd_residual_max), format_double(rep.shen_residual_max),
                   format_double(rep.quad_term_min), opt_str(rep.deficit_min),
                   opt_str(rep.deficit_max), opt_str(rep.bgh_integral), joined});
    if (cfg.csv_dir) {
      if (!rep.U_samples.empty()) {
        CsvTable u({"t", "value"});
        for (const auto& [t, v] : rep.U_samples) u.add_row(std::vector<double>{t, v});
        io::write_file(*cfg.csv_dir / (rep.model + "_U.csv"), u.str());
      }
      if (model.lambda_sign != 0) {
        CsvTable d({"r", "value"});
        for (double r : interior_grid(model, 100)) d.add_row(std::vector<double>{r, deficit(model, r)});
        io::write_file(*cfg.csv_dir / (rep.model + "_deficit.csv"), d.str());
      }
    }
  }
  json data = {{"reports", reports}, {"breach_count", breaches}};
  emit(cfg, "verify", cfg.format == Format::Json ? dump(envelope(cfg, data)) : table.str(), out);
  return breaches == 0 ? kOk : kBreach;
}

int run_shoot(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<double> masses = cfg.masses;
  if (masses.empty()) {
    if (cfg.n == 3) {
      masses = {0.02, 0.1, 0.18};
    } else {
      const double mm = m_max(cfg.n);
      masses = {0.1 * mm, 0.5 * mm, 0.9 * mm};
    }
  }
  const auto rep = birkhoff_check(cfg.n, masses, cfg.step);
  CsvTable table({"mass", "horizon", "r0", "kappa", "u_max_numeric", "u_max_closed",
                  "locus_numeric", "locus_closed", "surface_gravity_numeric",
                  "surface_gravity_closed", "profile_deviation", "constraint_drift"});
  bool breach = rep.drift_flagged || rep.max_deviation > 1e-6;
  for (const auto& s : rep.shots) {
    table.add_row({format_double(s.mass), s.horizon, format_double(s.r0), format_double(s.kappa),
                   format_double(s.u_max_numeric), format_double(s.u_max_closed),
                   format_double(s.locus_numeric), format_double(s.locus_closed),
                   format_double(s.surface_gravity_numeric),
                   format_double(s.surface_gravity_closed), format_double(s.profile_deviation),
                   format_double(s.constraint_drift)});
    if (std::abs(s.u_max_numeric - s.u_max_closed) > 1e-6 ||
        std::abs(s.locus_numeric - s.locus_closed) > 1e-6) {
      breach = true;
    }
  }
  if (cfg.trajectory_dir) {
    for (std::size_t i = 0; i < masses.size(); ++i) {
      for (bool outer : {false, true}) {
        if (masses[i] == 0.0 && !outer) continue;
        const auto tr = integrate(horizon_shot_config(cfg.n, masses[i], outer, cfg.step));
        CsvTable t({"s", "u", "u_dot", "phi", "phi_dot", "constraint"});
        for (const auto& x : tr.states) {
          t.add_row(std::vector<double>{x.s, x.u, x.u_dot, x.phi, x.phi_dot, x.constraint});
        }
        const std::string name =
            "trajectory_" + std::to_string(i) + "_" + (outer ? "outer" : "inner") + ".csv";
        io::write_file(*cfg.trajectory_dir / name, t.str());
      }
    }
  }
  if (breach) err << "breach: shooting deviates from the catalog profile\n";
  emit(cfg, "shoot", cfg.format == Format::Json ? dump(envelope(cfg, to_json(rep))) : table.str(),
       out);
  return breach ? kBreach : kOk;
}

int run_hawking(const CommandConfig& cfg, std::ostream& out) {
  const std::string kind_name = cfg.kind.value_or("kottler_hyperbolic");
  const auto kind = parse_model_kind(kind_name);
  if (!kind) throw ParameterError("unknown model kind '" + kind_name + "'");
  ModelTriple triple{*kind, cfg.n, cfg.mass, cfg.genus};
  if (*kind == ModelKind::KottlerHyperbolic) {
    if (!triple.mass) triple.mass = 0.3;
    if (!triple.genus && cfg.n == 3) triple.genus = 2;
  }
  const auto model = build(triple);
  if (cfg.points < 1) throw ParameterError("hawking needs at least one level");
  const auto problem = branch_problem(model, Branch::Outer);
  CsvTable table({"t", "value"});
  json rows = json::array();
  for (double t : default_t_grid(problem, cfg.points, cfg.t_max)) {
    const double mh = hawking_mass(model, t);
    table.add_row(std::vector<double>{t, mh});
    rows.push_back({{"t", t}, {"value", mh}});
  }
  emit(cfg, "hawking", cfg.format == Format::Json ? dump(envelope(cfg, rows)) : table.str(), out);
  return kOk;
}

}  // namespace

std::string_view to_string(Subcommand sub) {
  switch (sub) {
    case Subcommand::Models: return "models";
    case Subcommand::Figure1: return "figure1";
    case Subcommand::Classify: return "classify";
    case Subcommand::VirtualMass: return "virtual-mass";
    case Subcommand::Verify: return "verify";
    case Subcommand::Shoot: return "shoot";
    case Subcommand::Hawking: return "hawking";
  }
  return "unknown";
}

json to_json(const CommandConfig& cfg) {
  auto path_or_null = [](const std::optional<std::filesystem::path>& p) {
    return p ? json(p->string()) : json(nullptr);
  };
  return {{"subcommand", to_string(cfg.subcommand)},
          {"n", cfg.n},
          {"kind", cfg.kind ? json(*cfg.kind) : json(nullptr)},
          {"mass", cfg.mass ? json(*cfg.mass) : json(nullptr)},
          {"genus", cfg.genus ? json(*cfg.genus) : json(nullptr)},
          {"kappas", cfg.kappas},
          {"masses", cfg.masses},
          {"points", cfg.points},
          {"step", cfg.step},
          {"t_max", cfg.t_max},
          {"tol", cfg.tol ? json(*cfg.tol) : json(nullptr)},
          {"format", cfg.format == Format::Json ? "json" : "csv"},
          {"output", path_or_null(cfg.output)},
          {"csv_dir", path_or_null(cfg.csv_dir)},
          {"trajectory_dir", path_or_null(cfg.trajectory_dir)}};
}

int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.n < 3) throw ParameterError("--n must be at least 3");
    switch (cfg.subcommand) {
      case Subcommand::Models: return run_models(cfg, out);
      case Subcommand::Figure1: return run_figure1(cfg, out);
      case Subcommand::Classify: return run_classify(cfg, out);
      case Subcommand::VirtualMass: return run_virtual_mass(cfg, out);
      case Subcommand::Verify: return run_verify(cfg, out, err);
      case Subcommand::Shoot: return run_shoot(cfg, out, err);
      case Subcommand::Hawking: return run_hawking(cfg, out);
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const NoRootError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kArgError;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Static vacuum model solutions, surface gravities and identity checks",
               "staticvac"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommandConfig cfg;
  std::string format = "csv";
  std::string output, csv_dir, trajectory_dir, kind;
  double mass = 0.0, tol = 0.0;
  int genus = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "dimension of the Riemannian slice")
        ->check(CLI::Range(3, 64));
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", output, "output file (default: stdout or $" +
                                            std::string(kOutputDirEnv) + ")");
  };

  auto* models = app.add_subcommand("models", "catalog table");
  common(models);
  auto* figure1 = app.add_subcommand("figure1", "k_plus and k_minus over (0, m_max)");
  common(figure1);
  figure1->add_option("--points", cfg.points, "number of masses")->check(CLI::Range(2, 1000000));
  auto* cls = app.add_subcommand("classify", "horizon type of each surface gravity");
  common(cls);
  cls->add_option("--kappas", cfg.kappas, "normalized surface gravities")->required()->delimiter(',');
  auto* tol_opt = cls->add_option("--tol", tol, "cylindrical tolerance")->check(CLI::NonNegativeNumber);
  auto* vm = app.add_subcommand("virtual-mass", "virtual mass from horizon surface gravities");
  common(vm);
  vm->add_option("--kappas", cfg.kappas, "normalized surface gravities")->required()->delimiter(',');
  auto* vm_tol_opt = vm->add_option("--tol", tol, "cylindrical tolerance")->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify", "diagnostics over the catalog; exit 1 on a breach");
  common(verify);
  verify->add_option("--csv-dir", csv_dir, "directory for U(t) and deficit CSV files");
  auto* shoot = app.add_subcommand("shoot", "shoot from both horizons and compare with the catalog");
  common(shoot);
  shoot->add_option("--masses", cfg.masses, "mass grid in [0, m_max)")->delimiter(',');
  shoot->add_option("--step", cfg.step, "RK4 step (default min(1e-4, 1e-3 r0))")
      ->check(CLI::NonNegativeNumber);
  shoot->add_option("--trajectory-dir", trajectory_dir, "directory for trajectory CSV files");
  auto* hawking = app.add_subcommand("hawking", "Hawking mass of the level sets of u (n = 3)");
  common(hawking);
  hawking->add_option("--kind", kind, "model kind (default kottler_hyperbolic)");
  auto* mass_opt = hawking->add_option("--mass", mass, "mass parameter");
  auto* genus_opt = hawking->add_option("--genus", genus, "genus of the cross-section");
  hawking->add_option("--points", cfg.points, "number of levels")->check(CLI::Range(1, 1000000));
  hawking->add_option("--t-max", cfg.t_max, "levels span (u_min, u_min + t_max)")
      ->check(CLI::PositiveNumber);

  bool hawking_points_default = true;
  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
    hawking_points_default = hawking->count("--points") == 0;
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kArgError;
  }

  if (models->parsed()) cfg.subcommand = Subcommand::Models;
  if (figure1->parsed()) cfg.subcommand = Subcommand::Figure1;
  if (cls->parsed()) cfg.subcommand = Subcommand::Classify;
  if (vm->parsed()) cfg.subcommand = Subcommand::VirtualMass;
  if (verify->parsed()) cfg.subcommand = Subcommand::Verify;
  if (shoot->parsed()) cfg.subcommand = Subcommand::Shoot;
  if (hawking->parsed()) cfg.subcommand = Subcommand::Hawking;

  cfg.format = format == "json" ? Format::Json : Format::Csv;
  if (!output.empty()) cfg.output = output;
  if (!csv_dir.empty()) cfg.csv_dir = csv_dir;
  if (!trajectory_dir.empty()) cfg.trajectory_dir = trajectory_dir;
  if (!kind.empty()) cfg.kind = kind;
  if (tol_opt->count() > 0 || vm_tol_opt->count() > 0) cfg.tol = tol;
  if (mass_opt->count() > 0) cfg.mass = mass;
  if (genus_opt->count() > 0) cfg.genus = genus;
  if (cfg.subcommand == Subcommand::Hawking && hawking_points_default) cfg.points = 20;
  return run(cfg, out, err);
}

}  // namespace staticvac::cli
