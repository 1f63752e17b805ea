#pragma once

#include <functional>
#include <limits>

namespace staticvac::numerics {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// |S^{d}|, the volume of the unit d-sphere (d = 2 gives 4*pi).
double unit_sphere_volume(int d);

struct BisectionOptions {
  double abs_tol = 0.0;
  double rel_tol = 1e-13;
  int max_iterations = 400;
};

// Root of f on [lo, hi] given f(lo) and f(hi) of opposite sign (or one of them zero).
// Throws NoRootError when the bracket is invalid.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              const BisectionOptions& opts = {});

// One Newton step x - f(x)/f'(x), skipped when it would leave [lo, hi] or f' vanishes.
double newton_polish(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double x, double lo,
                     double hi);

// Derivatives of order 1..4 by central differences with one Richardson step
// (fourth-order accurate in h). Roundoff grows like eps * |f| / h^order.
double richardson_derivative(const std::function<double(double)>& f, double x, int order,
                             double h);

// Default step for richardson_derivative at x, balancing truncation against roundoff.
double default_fd_step(double x, int order);

// Integral of f over [a, b] by adaptive Gauss-Kronrod (61 points).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-13);

}  // namespace staticvac::numerics
