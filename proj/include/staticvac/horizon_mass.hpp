#pragma once

// Horizon radii, the surface-gravity functions k_+ and k_- of the
// Schwarzschild-de Sitter family, horizon classification and virtual mass.

#include <string>
#include <string_view>
#include <vector>

namespace staticvac {

struct HorizonRadii {
  std::vector<double> radii;  // ascending
  bool degenerate = false;    // some |W'(root)| < 1e-8
};

// Positive zeros of W = k - lambda_sign r^2 - 2 m r^(2-n). Throws NoRootError if none.
HorizonRadii horizon_radii(int n, double m, int k, int lambda_sign);

double k_plus(int n, double m);   // 0 <= m < m_max
double k_minus(int n, double m);  // 0 < m <= m_max

double invert_k_plus(int n, double kappa);   // kappa in [1, sqrt(n))
double invert_k_minus(int n, double kappa);  // kappa >= sqrt(n)

enum class HorizonType { Cosmological, BlackHole, Cylindrical };
std::string_view to_string(HorizonType type);

double default_classification_tol(int n);
HorizonType classify(double kappa, int n, double tol);
inline HorizonType classify(double kappa, int n) {
  return classify(kappa, n, default_classification_tol(n));
}

struct HorizonReport {
  double radius;
  double kappa;
  HorizonType horizon_type;
  std::string label;
};

enum class RegionKind { Outer, Inner, Cylindrical };
std::string_view to_string(RegionKind kind);

struct VirtualMassResult {
  double mass;
  RegionKind region_kind;
  double kappa_max;
  bool extrapolated = false;  // cylindrical regions: mass set to m_max by continuity
};

VirtualMassResult virtual_mass(const std::vector<double>& kappas, int n);
VirtualMassResult virtual_mass(const std::vector<double>& kappas, int n, double tol);

// Gamma^0_{0i} = d_i u / u and Gamma^i_{00} = u g^{ij} d_j u for the static
// metric -u^2 dt^2 + g, in a frame with |Du| along one unit direction.
struct KillingConnection {
  double gamma0_0r;
  double gammar_00;
  double grad_K_norm_sq;  // |nabla K|^2 = -2 |Du|^2
};

KillingConnection killing_connection(double u_val, double grad_u);

// sqrt(-|nabla K|^2 / 2). At u_val <= 0 the value is the limit along u = 10^-j.
double killing_kappa_check(double u_val, double grad_u);

}  // namespace staticvac
