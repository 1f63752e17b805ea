#include "staticvac/horizon_mass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "staticvac/errors.hpp"
#include "staticvac/model_catalog.hpp"
#include "staticvac/numerics.hpp"

namespace staticvac {

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

HorizonRadii horizon_radii(int n, double m, int k, int lambda_sign) {
  if (n < 3) throw ParameterError("dimension must be at least 3");
  if (k < -1 || k > 1 || lambda_sign < -1 || lambda_sign > 1) {
    throw ParameterError("k and lambda_sign must lie in {-1, 0, 1}");
  }
  const double s = lambda_sign;
  // P = r^(n-2) W has the same positive zeros and a single positive critical point.
  auto P = [&](double r) {
    return k * std::pow(r, n - 2) - s * std::pow(r, n) - 2.0 * m;
  };
  auto dP = [&](double r) {
    return (n - 2) * k * std::pow(r, n - 3) - s * n * std::pow(r, n - 1);
  };
  auto dW = [&](double r) { return -2.0 * s * r - 2.0 * (2 - n) * m * std::pow(r, 1 - n); };

  const int sign_zero = m != 0.0 ? -sign_of(m) : (k != 0 ? k : -lambda_sign);
  const int sign_inf = lambda_sign != 0 ? -lambda_sign : (k != 0 ? k : -sign_of(m));

  std::vector<double> cuts{0.0};
  const double rc2 = s != 0.0 ? (n - 2) * k / (s * n) : -1.0;
  HorizonRadii out;
  if (rc2 > 0.0) {
    const double rc = std::sqrt(rc2);
    const double pc = P(rc);
    const double scale = std::abs(k) * std::pow(rc, n - 2) + std::pow(rc, n) + 2.0 * std::abs(m);
    if (std::abs(pc) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
      out.radii.push_back(rc);
      out.degenerate = true;
      return out;
    }
    cuts.push_back(rc);
  }
  cuts.push_back(std::numeric_limits<double>::infinity());

  auto sign_at = [&](double r) {
    if (r == 0.0) return sign_zero;
    if (std::isinf(r)) return sign_inf;
    return sign_of(P(r));
  };

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double lo = cuts[i];
    double hi = cuts[i + 1];
    const int slo = sign_at(lo);
    const int shi = sign_at(hi);
    if (slo == 0 || shi == 0 || slo == shi) continue;
    if (std::isinf(hi)) {
      hi = std::max(1.0, 2.0 * lo);
      for (int it = 0; it < 2000 && sign_of(P(hi)) != shi; ++it) hi *= 2.0;
      if (sign_of(P(hi)) != shi) continue;
    }
    auto g = [&](double r) { return r == 0.0 ? static_cast<double>(slo) : P(r); };
    double root = numerics::bisect(g, lo, hi);
    root = numerics::newton_polish(P, dP, root, lo, hi);
    if (root > 0.0) out.radii.push_back(root);
  }
  if (out.radii.empty()) {
    throw NoRootError("no positive horizon radius for n = " + std::to_string(n) +
                      ", m = " + std::to_string(m));
  }
  std::sort(out.radii.begin(), out.radii.end());
  for (double r : out.radii) {
    if (std::abs(dW(r)) < 1e-8) out.degenerate = true;
  }
  return out;
}

namespace {

void check_dimension(int n) {
  if (n < 3) throw ParameterError("dimension must be at least 3");
}

// |W'(r)|/2 at a zero of 1 - r^2 - 2 m r^(2-n), written without m.
double sds_half_slope(int n, double r) { return std::abs(n * r * r - (n - 2)) / (2.0 * r); }

double sds_u_max_stable(int n, double m) {
  return std::sqrt(-std::expm1((2.0 / n) * std::log(m / m_max(n))));
}

// k_+ on [0, m_max] with its limit at m_max.
double k_plus_closed(int n, double m) {
  if (m <= 0.0) return 1.0;
  if (m >= m_max(n)) return std::sqrt(static_cast<double>(n));
  const double r = horizon_radii(n, m, 1, 1).radii.back();
  return sds_half_slope(n, r) / sds_u_max_stable(n, m);
}

// k_- on [0, m_max] with k_-(0) = +inf.
double k_minus_closed(int n, double m) {
  if (m <= 0.0) return std::numeric_limits<double>::infinity();
  if (m >= m_max(n)) return std::sqrt(static_cast<double>(n));
  const double r = horizon_radii(n, m, 1, 1).radii.front();
  return sds_half_slope(n, r) / sds_u_max_stable(n, m);
}

}  // namespace

double k_plus(int n, double m) {
  check_dimension(n);
  if (!(m >= 0.0 && m < m_max(n))) throw DomainError("k_plus requires 0 <= m < m_max");
  return k_plus_closed(n, m);
}

double k_minus(int n, double m) {
  check_dimension(n);
  if (!(m > 0.0 && m <= m_max(n))) throw DomainError("k_minus requires 0 < m <= m_max");
  return k_minus_closed(n, m);
}

double invert_k_plus(int n, double kappa) {
  check_dimension(n);
  const double root_n = std::sqrt(static_cast<double>(n));
  if (kappa < 1.0 - 1e-12) {
    throw DomainError("kappa = " + std::to_string(kappa) +
                      " < 1: sub-de-Sitter surface gravity, impossible on a solution");
  }
  if (!(kappa < root_n)) {
    throw DomainError("kappa = " + std::to_string(kappa) +
                      " >= sqrt(n): not a cosmological horizon, use invert_k_minus");
  }
  kappa = std::max(kappa, 1.0);
  if (kappa == 1.0) return 0.0;
  numerics::BisectionOptions opts{1e-12, 0.0, 400};
  return numerics::bisect([&](double m) { return k_plus_closed(n, m) - kappa; }, 0.0, m_max(n),
                          opts);
}

double invert_k_minus(int n, double kappa) {
  check_dimension(n);
  const double root_n = std::sqrt(static_cast<double>(n));
  if (!(kappa >= root_n) || std::isinf(kappa)) {
    throw DomainError("kappa = " + std::to_string(kappa) +
                      " outside [sqrt(n), inf): not a black hole horizon, use invert_k_plus");
  }
  if (kappa == root_n) return m_max(n);
  numerics::BisectionOptions opts{1e-12, 0.0, 400};
  return numerics::bisect([&](double m) { return k_minus_closed(n, m) - kappa; }, 0.0,
                          m_max(n), opts);
}

std::string_view to_string(HorizonType type) {
  switch (type) {
    case HorizonType::Cosmological: return "cosmological";
    case HorizonType::BlackHole: return "black_hole";
    case HorizonType::Cylindrical: return "cylindrical";
  }
  return "unknown";
}

std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::Outer: return "outer";
    case RegionKind::Inner: return "inner";
    case RegionKind::Cylindrical: return "cylindrical";
  }
  return "unknown";
}

double default_classification_tol(int n) { return 1e-9 * std::sqrt(static_cast<double>(n)); }

HorizonType classify(double kappa, int n, double tol) {
  const double root_n = std::sqrt(static_cast<double>(n));
  if (std::abs(kappa - root_n) <= tol) return HorizonType::Cylindrical;
  if (kappa > root_n + tol) return HorizonType::BlackHole;
  return HorizonType::Cosmological;
}

VirtualMassResult virtual_mass(const std::vector<double>& kappas, int n) {
  return virtual_mass(kappas, n, default_classification_tol(n));
}

VirtualMassResult virtual_mass(const std::vector<double>& kappas, int n, double tol) {
  check_dimension(n);
  if (kappas.empty()) throw ParameterError("virtual_mass needs at least one surface gravity");
  for (double k : kappas) {
    if (!(k >= 0.0) || !std::isfinite(k)) {
      throw ParameterError("surface gravities must be finite and nonnegative");
    }
  }
  const double kmax = *std::max_element(kappas.begin(), kappas.end());
  switch (classify(kmax, n, tol)) {
    case HorizonType::Cylindrical:
      return {m_max(n), RegionKind::Cylindrical, kmax, true};
    case HorizonType::BlackHole:
      return {invert_k_minus(n, kmax), RegionKind::Inner, kmax, false};
    case HorizonType::Cosmological:
      if (kmax < 1.0 - 1e-12) {
        throw DomainError("sub-de-Sitter surface gravity: max kappa = " + std::to_string(kmax) +
                          " < 1");
      }
      return {invert_k_plus(n, kmax), RegionKind::Outer, kmax, false};
  }
  throw DomainError("unreachable horizon type");
}

KillingConnection killing_connection(double u_val, double grad_u) {
  if (!(u_val > 0.0)) throw DomainError("the Killing connection needs u > 0");
  KillingConnection c;
  c.gamma0_0r = grad_u / u_val;
  c.gammar_00 = u_val * grad_u;
  // gamma_00 = -u^2, gamma^00 = -1/u^2, spatial part orthonormal.
  const double g00 = -u_val * u_val;
  const double g00_inv = -1.0 / (u_val * u_val);
  c.grad_K_norm_sq = g00 * c.gamma0_0r * c.gamma0_0r + g00_inv * c.gammar_00 * c.gammar_00;
  return c;
}

double killing_kappa_check(double u_val, double grad_u) {
  if (u_val > 0.0) return std::sqrt(-0.5 * killing_connection(u_val, grad_u).grad_K_norm_sq);
  // Horizon value as the limit of the one-sided sequence u = 10^-j.
  double kappa = 0.0;
  for (int j = 1; j <= 8; ++j) {
    kappa = std::sqrt(-0.5 * killing_connection(std::pow(10.0, -j), grad_u).grad_K_norm_sq);
  }
  return kappa;
}

}  // namespace staticvac
