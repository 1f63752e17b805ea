#include "staticvac/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "staticvac/errors.hpp"

namespace staticvac::numerics {

double unit_sphere_volume(int d) {
  if (d < 0) throw ParameterError("sphere dimension must be nonnegative");
  const double half = 0.5 * (d + 1);
  return 2.0 * std::pow(kPi, half) / std::tgamma(half);
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              const BisectionOptions& opts) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw NoRootError("bisect: no sign change on [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  for (int it = 0; it < opts.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double width = hi - lo;
    const double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(mid));
    if (width <= tol || mid == lo || mid == hi) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double newton_polish(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double x, double lo,
                     double hi) {
  const double d = df(x);
  if (d == 0.0 || !std::isfinite(d)) return x;
  const double next = x - f(x) / d;
  if (!(next >= lo && next <= hi)) return x;
  return std::abs(f(next)) <= std::abs(f(x)) ? next : x;
}

namespace {

double central(const std::function<double(double)>& f, double x, int order, double h) {
  switch (order) {
    case 1:
      return (f(x + h) - f(x - h)) / (2.0 * h);
    case 2:
      return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    case 3:
      return (f(x + 2 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2 * h)) / (2.0 * h * h * h);
    case 4:
      return (f(x + 2 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) + f(x - 2 * h)) /
             (h * h * h * h);
    default:
      throw ParameterError("richardson_derivative: order must be 1..4");
  }
}

}  // namespace

double richardson_derivative(const std::function<double(double)>& f, double x, int order,
                             double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  const double coarse = central(f, x, order, h);
  const double fine = central(f, x, order, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

double default_fd_step(double x, int order) {
  // eps^(1/(order + 4)) minimizes truncation h^4 against roundoff eps / h^order.
  const double scale = std::max(1.0, std::abs(x));
  const double eps = std::numeric_limits<double>::epsilon();
  return scale * std::pow(eps, 1.0 / (order + 4.0));
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  if (a == b) return 0.0;
  // Integrate over [0, 1]: the adaptive splitter stalls on intervals that are
  // narrow compared with their distance from the origin.
  const double width = b - a;
  auto g = [&](double x) { return f(a + width * x); };
  double err = 0.0;
  return width * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, 0.0, 1.0, 15,
                                                                                rel_tol, &err);
}

}  // namespace staticvac::numerics
