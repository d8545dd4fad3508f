#include "anyon/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/sin_pi.hpp>
#include <boost/math/special_functions/cos_pi.hpp>

#include <cmath>
#include <limits>
#include <string>

#include "anyon/errors.hpp"

namespace anyon::specfun {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();
const cplx I{0.0, 1.0};

double sinpi(double x) { return boost::math::sin_pi(x); }
double cospi(double x) { return boost::math::cos_pi(x); }

cplx expi_pi(double x) { return {cospi(x), sinpi(x)}; }

void require_finite(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("cylinder function: non-finite argument");
}

bool on_positive_imaginary_axis(cplx z) { return z.real() == 0.0 && z.imag() > 0.0; }

// Ascending series; valid for any real order (1/Gamma handles the poles).
cplx j_series(double nu, cplx z) {
  const cplx half = 0.5 * z;
  const cplx q = -half * half;
  cplx term = rgamma(nu + 1.0);
  cplx sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (double(k) * (nu + k));
    sum += term;
    if (nu + k > 0.0 && std::abs(q) < 0.5 * k * (nu + k) &&
        std::abs(term) <= 0.25 * eps * std::abs(sum))
      break;
  }
  return sum * std::exp(nu * std::log(half));
}

cplx y_connection(double nu, cplx z) {
  return (j_series(nu, z) * cospi(nu) - j_series(-nu, z)) / sinpi(nu);
}

// Y near integer order: symmetric averages at nu +- h_j, h_j = j*h, then
// Neville extrapolation in h^2 to h = 0.
cplx y_symmetric_limit(double nu, cplx z) {
  constexpr int levels = 4;
  constexpr double h = 4e-3;
  cplx table[levels];
  double h2[levels];
  for (int j = 0; j < levels; ++j) {
    const double hj = h * (j + 1);
    h2[j] = hj * hj;
    table[j] = 0.5 * (y_connection(nu + hj, z) + y_connection(nu - hj, z));
  }
  for (int m = 1; m < levels; ++m)
    for (int j = levels - 1; j >= m; --j)
      table[j] = (h2[j] * table[j - 1] - h2[j - m] * table[j]) / (h2[j] - h2[j - m]);
  return table[levels - 1];
}

cplx y_series(double nu, cplx z) {
  if (std::abs(nu - std::round(nu)) < kIntegerWindow) return y_symmetric_limit(nu, z);
  return y_connection(nu, z);
}

struct Raw {
  cplx j, y, h1, h1s;  // h1s = exp(-iz) H1
};

// Hankel expansions for Re w >= 0 and 0 <= nu < 2; returns exp(-iw) H1 and
// exp(iw) H2.
void hankel_asymptotic(double nu, cplx w, cplx& h1s, cplx& h2s) {
  const double m4 = 4.0 * nu * nu;
  cplx s1 = 1.0, s2 = 1.0;
  cplx t = 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    t *= (m4 - odd * odd) / (8.0 * k * w);
    const double mag = std::abs(t);
    if (mag > last) break;  // asymptotic series started to diverge
    const cplx ik = std::pow(I, k);
    s1 += ik * t;
    s2 += std::conj(ik) * t;
    last = mag;
    if (mag < 0.25 * eps) break;
  }
  const cplx pref = std::sqrt(2.0 / (pi * w));
  const cplx phase = std::exp(-I * (0.5 * pi * nu + 0.25 * pi));
  h1s = pref * phase * s1;
  h2s = pref * std::conj(phase) * s2;
}

Raw asymptotic_small_order(double nu, cplx z) {
  cplx h1s, h2s;
  if (z.real() >= 0.0) {
    hankel_asymptotic(nu, z, h1s, h2s);
    const cplx h1 = h1s * std::exp(I * z);
    const cplx h2 = h2s * std::exp(-I * z);
    return {0.5 * (h1 + h2), (h1 - h2) / (2.0 * I), h1, h1s};
  }
  // Re z < 0: continue from w = -z across the half turn.
  const cplx w = -z;
  hankel_asymptotic(nu, w, h1s, h2s);
  const cplx h1w = h1s * std::exp(I * w);
  const cplx h2w = h2s * std::exp(-I * w);
  const cplx jw = 0.5 * (h1w + h2w);
  const cplx yw = (h1w - h2w) / (2.0 * I);
  const double turn = z.imag() >= 0.0 ? 1.0 : -1.0;
  const cplx j = expi_pi(turn * nu) * jw;
  const cplx y = expi_pi(-turn * nu) * yw + turn * 2.0 * I * cospi(nu) * jw;
  if (turn > 0.0) {
    // H1(e^{i pi} w) = -e^{-i pi nu} H2(w); exp(-iz) = exp(iw).
    const cplx h1s_z = -expi_pi(-nu) * h2s;
    return {j, y, h1s_z * std::exp(I * z), h1s_z};
  }
  const cplx h1 = j + I * y;
  return {j, y, h1, h1 * std::exp(-I * z)};
}

// H1'/H1 by the second continued fraction (Steed), modified Lentz. Converges
// for |z| >~ 2 in the closed upper half plane when nu is not much above |z|.
cplx h1_log_derivative_cf2(double nu, cplx z) {
  constexpr double tiny = 1e-300;
  const double a1 = 0.25 - nu * nu;
  // tail = a1 / (b1 + a2 / (b2 + ...)), b_k = 2 (z + i k), a_k = (k - 1/2)^2 - nu^2
  cplx f = tiny, c = f, d = 0.0;
  for (int k = 1; k < 100000; ++k) {
    const cplx b = 2.0 * (z + I * double(k));
    const double a = k == 1 ? 1.0 : (k - 0.5) * (k - 0.5) - nu * nu;
    d = b + a * d;
    if (d == 0.0) d = tiny;
    c = b + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const cplx delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < eps) return I - 0.5 / z + I / z * a1 * f;
  }
  throw ConvergenceError("bessel: continued fraction for H1 ratio did not converge", 1.0);
}

// H1 from the Wronskian J H1' - J' H1 = 2i/(pi z), with J and J_{nu+1} summed
// directly. No cancellation between J and iY when Im z is large.
cplx h1_from_wronskian(double nu, cplx z, cplx j) {
  const cplx jp = nu / z * j - j_series(nu + 1.0, z);
  const cplx gamma = h1_log_derivative_cf2(nu, z);
  return 2.0 * I / (pi * z * (gamma * j - jp));
}

constexpr double kSteedRadius = 2.0;

Raw series_region(double nu, cplx z) {
  Raw r;
  r.j = j_series(nu, z);
  if (on_positive_imaginary_axis(z)) {
    // H1(ix) = (2/(i pi)) e^{-i pi nu/2} K_nu(x); avoids J + iY cancellation.
    const double x = z.imag();
    const double k = boost::math::cyl_bessel_k(std::abs(nu), x);
    const double ks = k * std::exp(x);
    const cplx pref = 2.0 / (I * pi) * expi_pi(-0.5 * nu);
    r.h1 = pref * k;
    r.h1s = pref * ks;
    r.y = (r.h1 - r.j) / I;
  } else if (std::abs(z) >= kSteedRadius && z.imag() >= 0.0) {
    // Low orders by the Wronskian, then upward recurrence (H1 is dominant).
    const double n = std::floor(nu);
    const double nu0 = nu - n;
    cplx h_prev = h1_from_wronskian(nu0, z, n == 0.0 ? r.j : j_series(nu0, z));
    cplx h_cur = n == 0.0 ? h_prev : h1_from_wronskian(nu0 + 1.0, z, n == 1.0 ? r.j : j_series(nu0 + 1.0, z));
    for (double v = nu0 + 1.0; v < nu - 0.5; v += 1.0) {
      const cplx next = 2.0 * v / z * h_cur - h_prev;
      h_prev = h_cur;
      h_cur = next;
    }
    r.h1 = n == 0.0 ? h_prev : h_cur;
    r.h1s = r.h1 * std::exp(-I * z);
    r.y = (r.h1 - r.j) / I;
  } else {
    r.y = y_series(nu, z);
    r.h1 = r.j + I * r.y;
    r.h1s = r.h1 * std::exp(-I * z);
  }
  return r;
}

// J_{nu+1}/J_nu by the first continued fraction (modified Lentz).
cplx j_ratio_cf1(double nu, cplx z) {
  constexpr double tiny = 1e-300;
  cplx f = tiny, c = f, d = 0.0;
  for (int k = 1; k < 100000; ++k) {
    const cplx b = 2.0 * (nu + k) / z;
    const double a = k == 1 ? 1.0 : -1.0;
    d = b + a * d;
    if (d == 0.0) d = tiny;
    c = b + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const cplx delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < eps) return f;
  }
  throw ConvergenceError("bessel: continued fraction for J ratio did not converge", 1.0);
}

Raw asymptotic_region(double nu, cplx z) {
  if (nu < 2.0) return asymptotic_small_order(nu, z);

  const double n = std::floor(nu);
  const double nu0 = nu - n;
  const Raw b0 = asymptotic_small_order(nu0, z);
  const Raw b1 = asymptotic_small_order(nu0 + 1.0, z);

  // Upward recurrence is stable for the dominant H1, H2 (scaled by a common
  // order-independent factor, so the recurrence is unchanged).
  const cplx e_p = std::exp(I * z);
  cplx h1_prev = b0.h1s, h1_cur = b1.h1s;
  cplx h2_prev = (2.0 * b0.j - b0.h1) * e_p;  // exp(iz) H2
  cplx h2_cur = (2.0 * b1.j - b1.h1) * e_p;
  for (double v = nu0 + 1.0; v < nu - 0.5; v += 1.0) {
    const cplx f = 2.0 * v / z;
    const cplx h1_next = f * h1_cur - h1_prev;
    const cplx h2_next = f * h2_cur - h2_prev;
    h1_prev = h1_cur;
    h1_cur = h1_next;
    h2_prev = h2_cur;
    h2_cur = h2_next;
  }
  Raw r;
  r.h1s = h1_cur;
  r.h1 = h1_cur * e_p;
  const cplx h2 = h2_cur * std::exp(-I * z);
  r.y = (r.h1 - h2) / (2.0 * I);

  if (nu < 0.5 * std::abs(z)) {
    r.j = 0.5 * (r.h1 + h2);
    return r;
  }
  // J is minimal for large order: continued fraction plus downward recurrence,
  // normalized to the directly computed low order value.
  const cplx ratio = j_ratio_cf1(nu, z);
  cplx upper = ratio;  // J_{v+1}, relative
  cplx cur = 1.0;      // J_v, relative
  cplx top = 1.0;      // relative J_nu after rescaling
  cplx below_cur = 0.0;
  for (double v = nu; v > nu0 + 0.5; v -= 1.0) {
    const cplx lower = 2.0 * v / z * cur - upper;
    upper = cur;
    cur = lower;
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      upper *= 1e-250;
      top *= 1e-250;
    }
  }
  below_cur = cur;  // relative J_{nu0}
  const cplx rel1 = upper;  // relative J_{nu0+1}
  const bool use0 = std::abs(b0.j) >= std::abs(b1.j);
  r.j = use0 ? top * (b0.j / below_cur) : top * (b1.j / rel1);
  r.y = (r.h1 - r.j) / I;
  return r;
}

Raw evaluate_nonnegative(double nu, cplx z) {
  if (std::abs(z) < kSeriesRadius) return series_region(nu, z);
  return asymptotic_region(nu, z);
}

}  // namespace

CylinderOrder::CylinderOrder(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || nu <= -1.0)
    throw DomainError("cylinder order must be finite and > -1, got " + std::to_string(nu));
}

double rgamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  if (x < 0.5) return sinpi(x) * std::tgamma(1.0 - x) / pi;
  if (x > 171.0) return 0.0;
  return 1.0 / std::tgamma(x);
}

double gamma_real(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
  if (x <= 0.0 && x == std::floor(x))
    throw DomainError("gamma: pole at non-positive integer " + std::to_string(x));
  if (x < 0.5) return pi / (sinpi(x) * std::tgamma(1.0 - x));
  return std::tgamma(x);
}

CylinderValues cylinder(CylinderOrder order, cplx z) {
  require_finite(z);
  const double nu = order.value();
  if (z == 0.0) {
    if (nu == 0.0 || nu > 0.0)
      throw DomainError("cylinder: Y and H are singular at z = 0");
    throw DomainError("cylinder: negative order is singular at z = 0");
  }
  if (nu >= 0.0) {
    const Raw r = evaluate_nonnegative(nu, z);
    return {r.j, r.y, r.h1};
  }
  const double p = -nu;  // 0 < p < 1
  const Raw r = evaluate_nonnegative(p, z);
  const double c = cospi(p), s = sinpi(p);
  return {c * r.j - s * r.y, s * r.j + c * r.y, expi_pi(p) * r.h1};
}

cplx bessel_j(CylinderOrder nu, cplx z) {
  require_finite(z);
  if (z == 0.0) {
    if (nu.value() == 0.0) return 1.0;
    if (nu.value() > 0.0) return 0.0;
    throw DomainError("bessel_j: negative order is singular at z = 0");
  }
  if (nu.value() >= 0.0 && std::abs(z) < kSeriesRadius) return j_series(nu.value(), z);
  return cylinder(nu, z).j;
}

cplx bessel_y(CylinderOrder nu, cplx z) { return cylinder(nu, z).y; }
cplx hankel1(CylinderOrder nu, cplx z) { return cylinder(nu, z).h1; }

cplx hankel2(CylinderOrder nu, cplx z) {
  const CylinderValues v = cylinder(nu, z);
  return v.j - I * v.y;
}

cplx hankel1_scaled(CylinderOrder order, cplx z) {
  require_finite(z);
  if (z == 0.0) throw DomainError("hankel1: singular at z = 0");
  const double nu = order.value();
  if (nu >= 0.0) return evaluate_nonnegative(nu, z).h1s;
  return expi_pi(-nu) * evaluate_nonnegative(-nu, z).h1s;
}

cplx bessel_j_prime(CylinderOrder nu, cplx z) {
  return nu.value() / z * bessel_j(nu, z) - bessel_j(nu.value() + 1.0, z);
}

cplx bessel_y_prime(CylinderOrder nu, cplx z) {
  return nu.value() / z * bessel_y(nu, z) - bessel_y(nu.value() + 1.0, z);
}

cplx hankel1_prime(CylinderOrder nu, cplx z) {
  return nu.value() / z * hankel1(nu, z) - hankel1(nu.value() + 1.0, z);
}

std::pair<double, double> bessel_i_k(CylinderOrder order, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_i_k: x must be positive and finite");
  const double nu = order.value();
  try {
    const double i = boost::math::cyl_bessel_i(nu, x);
    const double k = boost::math::cyl_bessel_k(std::abs(nu), x);
    if (!std::isfinite(i)) throw OverflowError("bessel_i_k: I overflows");
    return {i, k};
  } catch (const std::overflow_error&) {
    throw OverflowError("bessel_i_k: argument " + std::to_string(x) + " beyond exponential range");
  }
}

std::pair<double, double> bessel_i_k_prime(CylinderOrder nu, double x) {
  const auto [i, k] = bessel_i_k(nu, x);
  const auto [i1, k1] = bessel_i_k(nu.value() + 1.0, x);
  return {i1 + nu.value() / x * i, -k1 + nu.value() / x * k};
}

}  // namespace anyon::specfun
