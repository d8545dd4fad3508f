#include "anyon/delta_model.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/cos_pi.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include "anyon/errors.hpp"
#include "anyon/free_theory.hpp"
#include "anyon/specfun.hpp"

namespace anyon::contact {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double euler_gamma = std::numbers::egamma;
constexpr cplx I{0.0, 1.0};

bool bosonic(double alpha) { return alpha < kBosonicCrossover; }

// log Gamma(1+a) - log Gamma(1-a) for 0 <= a < 1.
double log_gamma_ratio(double a) { return std::lgamma(1.0 + a) - std::lgamma(1.0 - a); }

cplx expm1c(cplx u) {
  if (std::abs(u) < 1e-5) return u * (1.0 + u * (0.5 + u / 6.0));
  return std::exp(u) - 1.0;
}

void check_sheet(cplx k) {
  if (!std::isfinite(k.real()) || !std::isfinite(k.imag()) || k == 0.0)
    throw DomainError("contact: k must be finite and nonzero");
  if (k.imag() < 0.0) throw DomainError("contact: k must satisfy 0 <= arg k <= pi");
}

void check_momentum(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("contact: k must be positive");
}

// (pi/2) / A, i.e. the bracket of the generic formula times sin(pi a) / sin(pi a).
// Written as [2 s a e^u - expm1(u) - 2 sin^2(pi a/2)] / sin(pi a) - i with
// e^u = (k/2)^{-2a} Gamma(1+a)/Gamma(1-a), which stays accurate as a -> 0.
cplx inverse_bracket(const ContactExtension& ext, cplx k) {
  const double a = ext.alpha;
  if (bosonic(a)) {
    return 2.0 / pi * (std::log(k / (2.0 * I)) + euler_gamma + ext.s);
  }
  const cplx u = -2.0 * a * std::log(k / 2.0) + log_gamma_ratio(a);
  const double h = boost::math::sin_pi(0.5 * a);
  const cplx num = 2.0 * ext.s * a * std::exp(u) - expm1c(u) - 2.0 * h * h;
  return num / boost::math::sin_pi(a) - I;
}

}  // namespace

ContactExtension::ContactExtension(double a, double s_) : alpha(a), s(s_) {
  if (!(alpha >= 0.0) || !(alpha < 1.0)) throw DomainError("contact: alpha must lie in [0, 1)");
  if (std::isnan(s)) throw DomainError("contact: s must not be NaN");
}

bool ContactExtension::is_free() const noexcept { return std::isinf(s); }

cplx coefficient_A(const ContactExtension& ext, cplx k) {
  check_sheet(k);
  if (ext.is_free()) return 0.0;
  const cplx b = inverse_bracket(ext, k);
  if (b == 0.0) {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }
  return pi / 2.0 / b;
}

cplx resolvent_kernel(const ContactExtension& ext, cplx k, double r, double rp) {
  check_sheet(k);
  if (!(r > 0.0) || !(rp > 0.0)) throw DomainError("contact: radii must be positive");
  const double a = ext.alpha;
  const double rl = std::min(r, rp), rg = std::max(r, rp);
  const auto cl = specfun::cylinder(a, k * rl);
  const auto cg = specfun::cylinder(a, k * rg);
  const double root = std::sqrt(r * rp);
  cplx g = I * pi / 2.0 * root * cl.j * cg.h1;
  if (!ext.is_free()) g -= coefficient_A(ext, k) * root * cl.h1 * cg.h1;
  return g;
}

double ContactBoundState::operator()(double r) const {
  if (!exists) return 0.0;
  if (!(r > 0.0)) throw DomainError("contact: radius must be positive");
  const double kappa = k_b.imag();
  const double x = kappa * r;
  if (x > 700.0) return 0.0;
  const double norm = bosonic(alpha) ? std::sqrt(2.0)
                                     : std::sqrt(2.0 * boost::math::sin_pi(alpha) / (pi * alpha));
  return norm * std::sqrt(r) * kappa * boost::math::cyl_bessel_k(alpha, x);
}

ContactBoundState bound_state(const ContactExtension& ext) {
  ContactBoundState b;
  b.alpha = ext.alpha;
  if (ext.is_free()) return b;
  double log_kappa_half;
  if (bosonic(ext.alpha)) {
    log_kappa_half = -euler_gamma - ext.s;
  } else {
    const double c = 1.0 - 2.0 * ext.alpha * ext.s;
    if (c == 0.0) {
      b.degenerate = true;
      return b;
    }
    if (c < 0.0) return b;
    log_kappa_half = (log_gamma_ratio(ext.alpha) + std::log(c)) / (2.0 * ext.alpha);
  }
  const double kappa = 2.0 * std::exp(log_kappa_half);
  if (!std::isfinite(kappa)) throw OverflowError("contact: bound-state momentum overflows");
  if (kappa == 0.0) return b;
  b.exists = true;
  b.k_b = {0.0, kappa};
  b.E_b = -kappa * kappa;
  return b;
}

double phase_function(const ContactExtension& ext, double k) {
  check_momentum(k);
  if (ext.is_free()) return std::numeric_limits<double>::infinity();
  return (inverse_bracket(ext, k) + I).real();
}

double phase_shift(const ContactExtension& ext, double k) {
  check_momentum(k);
  if (ext.is_free()) return 0.0;
  return std::atan2(1.0, phase_function(ext, k));
}

cplx partial_amplitude(const ContactExtension& ext, double k) {
  check_momentum(k);
  if (ext.is_free()) return 0.0;
  return 4.0 * I / pi * coefficient_A(ext, k) * amplitude_prefactor(k);
}

ContactLevinson levinson_relation(const ContactExtension& ext) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (ext.is_free()) return {0.0, 0.0, 0.0, 0, nan, false};
  const double a = ext.alpha;
  ContactLevinson L{};
  L.degenerate = false;
  if (bosonic(a)) {
    // a(k) = (2/pi)(ln(k/2) + gamma + s): -inf at k -> 0, +inf at k -> inf.
    L.delta_zero = pi;
    L.delta_infinity = 0.0;
    L.n = 1;
  } else {
    const double c = 2.0 * a * ext.s - 1.0;
    L.delta_infinity = pi * a;
    if (c == 0.0) {
      L.delta_zero = pi * a;
      L.n = 0;
      L.degenerate = true;
    } else {
      L.delta_zero = c > 0.0 ? 0.0 : pi;
      L.n = c > 0.0 ? 0 : 1;
    }
  }
  L.lhs = L.delta_zero - L.delta_infinity;
  if (L.degenerate) {
    L.alpha_hat = nan;
  } else {
    double h = std::fmod(L.n - L.lhs / pi, 1.0);
    if (h < 0.0) h += 1.0;
    if (h > 1.0 - 1e-14) h = 0.0;
    L.alpha_hat = h;
  }
  return L;
}

}  // namespace anyon::contact
