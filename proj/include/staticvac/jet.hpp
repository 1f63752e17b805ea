#pragma once

// Truncated Taylor arithmetic. A Jet<N> holds the normalized Taylor
// coefficients c_k = f^(k)(x0) / k!, k = 0..N, of a function at a point, and
// propagates them exactly through arithmetic and elementary functions.

#include <array>
#include <cmath>
#include <cstddef>

namespace staticvac {

template <std::size_t N>
class Jet {
 public:
  static constexpr std::size_t order = N;

  constexpr Jet() = default;
  constexpr Jet(double value) { c_[0] = value; }  // NOLINT: implicit constants are intended

  static constexpr Jet variable(double x0) {
    Jet j(x0);
    if constexpr (N >= 1) j.c_[1] = 1.0;
    return j;
  }

  constexpr double value() const { return c_[0]; }
  constexpr double coeff(std::size_t k) const { return c_[k]; }
  constexpr double& coeff(std::size_t k) { return c_[k]; }

  // k-th derivative at the expansion point.
  double derivative(std::size_t k) const {
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return c_[k] * f;
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t k = 0; k <= N; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t k = 0; k <= N; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet& operator*=(double a) {
    for (auto& c : c_) c *= a;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) { return a *= -1.0; }
  friend Jet operator*(Jet a, double b) { return a *= b; }
  friend Jet operator*(double b, Jet a) { return a *= b; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t k = 0; k <= N; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
      r.c_[k] = s;
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet q;
    for (std::size_t k = 0; k <= N; ++k) {
      double s = a.c_[k];
      for (std::size_t j = 1; j <= k; ++j) s -= b.c_[j] * q.c_[k - j];
      q.c_[k] = s / b.c_[0];
    }
    return q;
  }

  friend Jet sqrt(const Jet& a) {
    Jet s;
    s.c_[0] = std::sqrt(a.c_[0]);
    for (std::size_t k = 1; k <= N; ++k) {
      double acc = a.c_[k];
      for (std::size_t j = 1; j < k; ++j) acc -= s.c_[j] * s.c_[k - j];
      s.c_[k] = acc / (2.0 * s.c_[0]);
    }
    return s;
  }

  // a^p for real p; requires a(x0) > 0 unless p is a nonnegative integer handled by the caller.
  friend Jet pow(const Jet& a, double p) {
    Jet y;
    y.c_[0] = std::pow(a.c_[0], p);
    for (std::size_t k = 1; k <= N; ++k) {
      double acc = 0.0;
      for (std::size_t j = 1; j <= k; ++j) {
        acc += ((p + 1.0) * static_cast<double>(j) - static_cast<double>(k)) * a.c_[j] * y.c_[k - j];
      }
      y.c_[k] = acc / (static_cast<double>(k) * a.c_[0]);
    }
    return y;
  }

  friend Jet exp(const Jet& a) {
    Jet e;
    e.c_[0] = std::exp(a.c_[0]);
    for (std::size_t k = 1; k <= N; ++k) {
      double acc = 0.0;
      for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * a.c_[j] * e.c_[k - j];
      e.c_[k] = acc / static_cast<double>(k);
    }
    return e;
  }

  // sin and cos (hyperbolic = false) or sinh and cosh (hyperbolic = true) together.
  friend std::array<Jet, 2> sincos(const Jet& a, bool hyperbolic) {
    Jet s, c;
    s.c_[0] = hyperbolic ? std::sinh(a.c_[0]) : std::sin(a.c_[0]);
    c.c_[0] = hyperbolic ? std::cosh(a.c_[0]) : std::cos(a.c_[0]);
    const double sign = hyperbolic ? 1.0 : -1.0;
    for (std::size_t k = 1; k <= N; ++k) {
      double as = 0.0, ac = 0.0;
      for (std::size_t j = 1; j <= k; ++j) {
        const double ja = static_cast<double>(j) * a.c_[j];
        as += ja * c.c_[k - j];
        ac += ja * s.c_[k - j];
      }
      s.c_[k] = as / static_cast<double>(k);
      c.c_[k] = sign * ac / static_cast<double>(k);
    }
    return {s, c};
  }

 private:
  std::array<double, N + 1> c_{};
};

}  // namespace staticvac
