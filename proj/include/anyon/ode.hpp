#pragma once

// Dormand-Prince 5(4) with adaptive steps for small complex systems.
//
// A System provides
//   void rhs(double x, const State& y, State& dy) const;
//   double amplitude(double x, const State& y) const;
// The local error is measured against rtol * amplitude, so the system decides
// which combination of components sets the scale (e.g. |u| + |u'|/omega for
// oscillatory solutions that pass through zero).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "anyon/errors.hpp"

namespace anyon::num {

template <std::size_t N>
using OdeState = std::array<std::complex<double>, N>;

struct OdeOptions {
  double rtol = 1e-11;
  double h_init = 0.0;  // 0: pick from the interval length
  long max_steps = 2'000'000;
};

struct OdeStats {
  long accepted = 0;
  long rejected = 0;
};

template <std::size_t N, class System>
OdeState<N> integrate_dp5(const System& sys, double x0, double x1, OdeState<N> y,
                          const OdeOptions& opt = {}, OdeStats* stats = nullptr) {
  using S = OdeState<N>;
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double span = x1 - x0;
  if (span == 0.0) return y;
  const double dir = span > 0.0 ? 1.0 : -1.0;
  double h = opt.h_init > 0.0 ? opt.h_init : 1e-3 * std::abs(span);
  h = std::min(h, std::abs(span)) * dir;

  S k1, k2, k3, k4, k5, k6, k7, tmp, ynew;
  double x = x0;
  sys.rhs(x, y, k1);
  long steps = 0;
  while (dir * (x1 - x) > 0.0) {
    if (++steps > opt.max_steps)
      throw ConvergenceError("ode: step limit reached", std::abs(x1 - x));
    if (dir * (x + h - x1) > 0.0) h = x1 - x;
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    sys.rhs(x + c2 * h, tmp, k2);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    sys.rhs(x + c3 * h, tmp, k3);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    sys.rhs(x + c4 * h, tmp, k4);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    sys.rhs(x + c5 * h, tmp, k5);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    sys.rhs(x + h, tmp, k6);
    for (std::size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    sys.rhs(x + h, ynew, k7);

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const auto e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                          e7 * k7[i]);
      err = std::max(err, std::abs(e));
    }
    const double scale =
        opt.rtol * std::max(sys.amplitude(x, y), sys.amplitude(x + h, ynew));
    const double ratio = scale > 0.0 ? err / scale : (err > 0.0 ? 1e10 : 0.0);
    if (!std::isfinite(ratio)) {
      h *= 0.2;
      if (stats) ++stats->rejected;
      if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(x)))
        throw ConvergenceError("ode: step size underflow", std::abs(x1 - x));
      continue;
    }
    if (ratio <= 1.0) {
      x += h;
      y = ynew;
      k1 = k7;
      if (stats) ++stats->accepted;
      const double grow = ratio == 0.0 ? 5.0 : std::min(5.0, 0.9 * std::pow(ratio, -0.2));
      h *= grow;
    } else {
      if (stats) ++stats->rejected;
      h *= std::max(0.2, 0.9 * std::pow(ratio, -0.25));
      if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(x)))
        throw ConvergenceError("ode: step size underflow", std::abs(x1 - x));
    }
  }
  return y;
}

}  // namespace anyon::num
