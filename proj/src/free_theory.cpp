#include "anyon/free_theory.hpp"

#include <boost/math/special_functions/cos_pi.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include "anyon/errors.hpp"
#include "anyon/specfun.hpp"

namespace anyon {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

double sinpi(double x) { return boost::math::sin_pi(x); }
double cospi(double x) { return boost::math::cos_pi(x); }

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw DomainError("statistics parameter alpha must lie in [0, 1]");
}

}  // namespace

AnyonChannel::AnyonChannel(double alpha, int m) : alpha_(alpha), m_(m) { check_alpha(alpha); }

double AnyonChannel::mu() const noexcept { return std::abs(2.0 * m_ + alpha_); }

cplx eigenfunction(const AnyonChannel& ch, double E, double r, double theta) {
  if (!(E >= 0.0)) throw DomainError("eigenfunction: energy must be >= 0");
  if (!(r >= 0.0)) throw DomainError("eigenfunction: r must be >= 0");
  const cplx phase = std::exp(I * (2.0 * ch.m() * theta));
  return phase / std::sqrt(2.0 * pi) * specfun::bessel_j(ch.mu(), std::sqrt(E) * r);
}

KernelSum free_resolvent_kernel(double alpha, cplx z, double r, double theta, double rp,
                                double thetap, int m_max, double tol) {
  check_alpha(alpha);
  if (m_max < 0) throw DomainError("resolvent kernel: m_max must be >= 0");
  if (!(r > 0.0 && rp > 0.0)) throw DomainError("resolvent kernel: radii must be positive");
  if (z.imag() == 0.0 && z.real() >= 0.0)
    throw DomainError("resolvent kernel: z lies on the spectrum [0, inf)");
  cplx k = std::sqrt(z);
  if (k.imag() < 0.0) k = -k;
  const double rl = std::min(r, rp), rg = std::max(r, rp);
  const double Theta = theta - thetap;

  auto term = [&](int m) {
    const double mu = std::abs(2.0 * m + alpha);
    const cplx j = specfun::bessel_j(mu, k * rl);
    if (j == 0.0) return cplx(0.0);  // J underflowed; H may be inf
    const cplx jh = j * specfun::hankel1(mu, k * rg);
    if (!std::isfinite(jh.real()) || !std::isfinite(jh.imag())) return cplx(0.0);
    return 0.5 * I * std::exp(I * (2.0 * m * Theta)) * jh;
  };

  cplx sum = term(0);
  double last_pos = 0.0, prev_pos = 0.0, last_neg = 0.0, prev_neg = 0.0;
  for (int m = 1; m <= m_max; ++m) {
    const cplx tp = term(m), tn = term(-m);
    sum += tp + tn;
    prev_pos = last_pos;
    last_pos = std::abs(tp);
    prev_neg = last_neg;
    last_neg = std::abs(tn);
  }

  // Geometric tail: for mu >> |k| r_> successive terms shrink by (r_</r_>)^2.
  auto tail_of = [&](double last, double prev) {
    if (last == 0.0) return 0.0;
    double ratio = (rl / rg) * (rl / rg);
    if (prev > 0.0) ratio = std::max(ratio, last / prev);
    const double mu_last = 2.0 * m_max;
    if (ratio >= 1.0 || mu_last < std::abs(k) * rg) return HUGE_VAL;
    return last * ratio / (1.0 - ratio);
  };
  double tail = 0.0;
  if (m_max == 0) {
    tail = HUGE_VAL;
  } else {
    tail = tail_of(last_pos, prev_pos) + tail_of(last_neg, prev_neg);
  }
  const bool ok = tail <= tol * std::max(std::abs(sum), 1e-300);
  return {sum, tail, m_max, ok};
}

double oscillatory_central_halfwidth(double alpha, double rho) {
  const double nominal = std::max(4.0, 4.0 / std::max(alpha, 1.0 - alpha));
  if (rho == 0.0) return nominal;
  // Keep at most a few oscillations of exp(i rho cosh y) on the real segment.
  const double osc = std::acosh(1.0 + 8.0 * pi / std::abs(rho));
  return std::max(0.25, std::min(nominal, osc));
}

cplx oscillatory_integral_I(double alpha, double rho, double chi, const num::QuadOptions& opt) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("I_alpha requires 0 < alpha < 1");
  if (!std::isfinite(rho) || !std::isfinite(chi))
    throw DomainError("I_alpha: non-finite argument");
  if (std::abs(std::sin(chi)) < 1e-14)
    throw DomainError("I_alpha: chi on a pole line (chi = 0 mod pi)");

  const cplx e2chi = std::exp(-2.0 * I * chi);
  auto g = [&](cplx y) {
    return std::exp(I * rho * std::cosh(y) - alpha * y) / (1.0 - std::exp(-2.0 * y) * e2chi);
  };
  auto on_real = [&](double y) { return g(cplx(y, 0.0)); };

  auto run = [&](const num::QuadResult& q, cplx& acc, double& err) {
    if (!q.converged) throw ConvergenceError("I_alpha: quadrature did not converge", q.error);
    acc += q.value;
    err += q.error;
  };

  cplx acc = 0.0;
  double err = 0.0;
  if (rho == 0.0) {
    // No contour shift is available; the real-line integrand decays like
    // e^{-alpha y} on the right and e^{-(2-alpha)|y|} on the left.
    const double yr = 40.0 / alpha, yl = 40.0 / (2.0 - alpha);
    const double t = oscillatory_central_halfwidth(alpha, 0.0);
    run(num::integrate(on_real, -t, t, opt), acc, err);
    run(num::integrate(on_real, t, yr, opt), acc, err);
    run(num::integrate(on_real, -yl, -t, opt), acc, err);
    return acc;
  }

  const double t = oscillatory_central_halfwidth(alpha, rho);
  const double s = rho > 0.0 ? 1.0 : -1.0;
  const cplx up = cplx(0.0, s * 0.5 * pi);
  // Along the shifted tails |exp(i rho cosh y)| = exp(-|rho| sinh|Re y|).
  const double yend = std::max(t + 1.0, std::asinh(45.0 / std::abs(rho)) + 1.0);
  run(num::integrate(on_real, -t, t, opt), acc, err);
  run(num::integrate_segment(g, cplx(t, 0.0), t + up, opt), acc, err);
  run(num::integrate_segment(g, t + up, yend + up, opt), acc, err);
  run(num::integrate_segment(g, -t - up, cplx(-t, 0.0), opt), acc, err);
  run(num::integrate_segment(g, -yend - up, -t - up, opt), acc, err);
  return acc;
}

PropagatorParts propagator_kernel(double alpha, const PropagatorPoint& p) {
  check_alpha(alpha);
  if (p.t == 0.0 || !std::isfinite(p.t)) throw DomainError("propagator: t must be nonzero");
  if (!(p.r > 0.0 && p.rp > 0.0)) throw DomainError("propagator: radii must be positive");
  const double chi = p.chi();
  if (chi == 0.0) throw DomainError("propagator: undefined at coincident angles");
  const double rho = p.rho();
  const double sg = chi > 0.0 ? 1.0 : -1.0;
  const cplx gauss = std::exp(I * ((p.r * p.r + p.rp * p.rp) / (4.0 * p.t)));
  const cplx flux = std::exp(I * (alpha * (chi - 0.5 * pi * sg)));
  const double c = std::cos(-0.5 * alpha * pi * sg + rho * std::cos(chi));
  PropagatorParts out;
  out.k0 = gauss * flux * c / (2.0 * pi * I * p.t);
  const double sa = sinpi(alpha);
  out.khat = 0.0;
  if (sa != 0.0)
    out.khat = I / (2.0 * pi * p.t) * (sa / pi) * gauss * oscillatory_integral_I(alpha, rho, chi);
  return out;
}

cplx ab_phase(const AnyonChannel& ch) {
  const double sign = 2.0 * ch.m() + ch.alpha() >= 0.0 ? 1.0 : -1.0;
  return {cospi(ch.alpha()), sign * sinpi(ch.alpha())};
}

cplx amplitude_prefactor(double k) {
  if (!(k > 0.0)) throw DomainError("amplitude prefactor: k must be positive");
  return 1.0 / std::sqrt(cplx(0.0, pi * k));
}

ABAmplitude ab_amplitude(double alpha, double k, double Theta) {
  check_alpha(alpha);
  const double st = std::sin(Theta);
  if (std::abs(st) < 1e-300 || std::abs(st) < 1e-15 * std::abs(std::cos(Theta)))
    throw DomainError("AB amplitude: forward/backward direction Theta = 0 mod pi");
  const cplx pref = amplitude_prefactor(k);
  const double cot = std::cos(Theta) / st;
  ABAmplitude a;
  a.regular_part = pref * sinpi(alpha) * cplx(cot, -1.0);
  a.forward_delta_coefficient = pi * pref * 2.0 * (cospi(alpha) - 1.0);
  a.k = k;
  a.theta = Theta;
  return a;
}

double ab_cross_section(double alpha, double k, double theta) {
  check_alpha(alpha);
  if (!(k > 0.0)) throw DomainError("AB cross-section: k must be positive");
  const double st = std::sin(theta);
  if (std::abs(st) < 1e-15 * std::max(1.0, std::abs(std::cos(theta))))
    throw DomainError("AB cross-section: forward direction theta = 0 mod pi");
  const double sa = sinpi(alpha);
  const double cot = std::cos(theta) / st;
  return sa * sa / (pi * k) * (1.0 + cot * cot);
}

}  // namespace anyon
