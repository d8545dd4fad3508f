#include "anyon/square_well.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "anyon/errors.hpp"
#include "anyon/free_theory.hpp"
#include "anyon/specfun.hpp"

namespace anyon::well {

namespace {

constexpr double pi = std::numbers::pi;

void check(double k, double mu) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("square well: k must be positive");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("square well: mu must be >= 0");
}

// Momentum beyond which the unwrapped phase is taken to sit on the
// delta -> 0 branch.
double anchor_momentum(const WellParams& w, double mu) {
  return 20.0 * (w.V0 * w.d + std::sqrt(w.V0) + mu / w.d + 1.0 / w.d);
}

}  // namespace

WellParams::WellParams(double v0, double dd) : V0(v0), d(dd) {
  if (!(V0 > 0.0) || !std::isfinite(V0)) throw DomainError("square well: V0 must be positive");
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("square well: d must be positive");
}

cplx inner_momentum(const WellParams& w, cplx k) { return std::sqrt(k * k + w.V0); }

cplx jost_function_analytic(const WellParams& w, cplx k, double mu) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("square well: mu must be >= 0");
  if (k == 0.0) throw DomainError("square well: k must be nonzero");
  if (k.imag() < 0.0) throw DomainError("square well: Jost function needs Im k >= 0");
  const cplx q = inner_momentum(w, k);
  const double d = w.d;
  const cplx lr = std::log(k) - std::log(q);
  const cplx pw = std::exp((mu - 0.5) * lr);
  const cplx kq = std::exp(lr);
  const cplx c_mu = free_jost(k, mu, d).first;
  // Order -1 at mu = 0: C_{-1} = -C_1.
  const double sgn = mu == 0.0 ? -1.0 : 1.0;
  const double lower = mu == 0.0 ? 1.0 : mu - 1.0;
  const cplx c_m1 = sgn * free_jost(k, lower, d).first;
  const cplx p_m1 = sgn * free_regular(q, lower, d).first;
  const cplx p_mu = free_regular(q, mu, d).first;
  return pw * (c_mu * p_m1 - kq * c_m1 * p_mu);
}

TanParts tan_delta_parts(const WellParams& w, double k, double mu) {
  check(k, mu);
  const double q = std::sqrt(k * k + w.V0);
  const double kd = k * w.d, qd = q * w.d;
  const auto a = specfun::cylinder(mu, kd);
  const double sgn = mu == 0.0 ? -1.0 : 1.0;
  const double lower = mu == 0.0 ? 1.0 : mu - 1.0;
  auto b = specfun::cylinder(lower, kd);
  b.j *= sgn;
  b.y *= sgn;
  const double jq1 = sgn * specfun::bessel_j(lower, qd).real();
  const double jq = specfun::bessel_j(mu, qd).real();
  return {q * a.j.real() * jq1 - k * b.j.real() * jq, q * a.y.real() * jq1 - k * b.y.real() * jq};
}

double phase_shift_raw(const WellParams& w, double k, double mu) {
  const TanParts t = tan_delta_parts(w, k, mu);
  if (!std::isfinite(t.den) || t.num == 0.0) return 0.0;
  return std::atan(t.num / t.den);
}

PhaseShiftCurve phase_shift_curve(const WellParams& w, double mu, std::vector<double> k_grid) {
  if (k_grid.empty()) throw DomainError("square well: empty momentum grid");
  std::sort(k_grid.begin(), k_grid.end());
  for (std::size_t i = 0; i < k_grid.size(); ++i)
    if (!(k_grid[i] > 0.0) || (i > 0 && k_grid[i] == k_grid[i - 1]))
      throw DomainError("square well: momenta must be positive and distinct");

  // Dense path from the smallest requested k up to the anchor, merged with
  // the requested grid; unwrapping proceeds downward modulo pi.
  const double top = std::max(anchor_momentum(w, mu), 4.0 * k_grid.back());
  std::vector<double> path;
  const double ratio = 1.005;
  for (double k = k_grid.front(); k < top; k *= ratio) path.push_back(k);
  path.push_back(top);
  path.insert(path.end(), k_grid.begin(), k_grid.end());
  std::sort(path.begin(), path.end());
  path.erase(std::unique(path.begin(), path.end()), path.end());

  const std::size_t n = path.size();
  std::vector<double> delta(n);
  double prev_raw = phase_shift_raw(w, path[n - 1], mu);
  double cur = prev_raw - pi * std::round(prev_raw / pi);
  delta[n - 1] = cur;
  for (std::size_t i = n - 1; i-- > 0;) {
    const double raw = phase_shift_raw(w, path[i], mu);
    const double jump = std::remainder(raw - prev_raw, pi);
    if (std::abs(jump) > 0.45 * pi)
      throw ConvergenceError("square well: phase unwrap ambiguous near k=" + std::to_string(path[i]),
                             std::abs(jump));
    cur += jump;
    delta[i] = cur;
    prev_raw = raw;
  }

  PhaseShiftCurve c;
  c.mu = mu;
  c.k_grid = k_grid;
  for (double k : k_grid) {
    const auto it = std::lower_bound(path.begin(), path.end(), k);
    c.delta.push_back(delta[it - path.begin()]);
    c.jost.push_back(jost_function_analytic(w, k, mu));
  }
  const std::size_t m = c.k_grid.size();
  if (m >= 2) {
    const double p = std::min(2.0 * mu, 2.0);
    const double a = std::pow(c.k_grid[0], p), b = std::pow(c.k_grid[1], p);
    c.delta_at_zero = c.delta[0] - (c.delta[1] - c.delta[0]) / (b - a) * a;
    const double u = 1.0 / c.k_grid[m - 1], v = 1.0 / c.k_grid[m - 2];
    c.delta_at_infinity = c.delta[m - 1] - (c.delta[m - 1] - c.delta[m - 2]) / (u - v) * u;
  } else {
    c.delta_at_zero = c.delta_at_infinity = c.delta[0];
  }
  return c;
}

double phase_shift(const WellParams& w, double k, double mu) {
  check(k, mu);
  return phase_shift_curve(w, mu, {k}).delta[0];
}

cplx partial_amplitude(const WellParams& w, double k, double mu) {
  const TanParts t = tan_delta_parts(w, k, mu);
  if (!std::isfinite(t.den) || !std::isfinite(t.num)) return 0.0;
  // N / (N + iD) with the J- and Y-combinations; D dominates at large order.
  const cplx ratio = t.num / cplx(t.num, t.den);
  return -2.0 * amplitude_prefactor(k) * ratio;
}

std::vector<double> bound_states(const WellParams& w, double mu, double kappa_floor, int per_decade) {
  const double hi = std::sqrt(std::max(w.V0, 1.0)) * 10.0;
  return anyon::bound_states(
             [&](double kappa) { return jost_function_analytic(w, {0.0, kappa}, mu).real(); },
             kappa_floor, hi, per_decade)
      .kappas;
}

std::vector<ReggeTrajectory> regge_roots(const WellParams& w, const std::vector<double>& mu_grid,
                                         const ReggeOptions& opt) {
  if (mu_grid.empty()) throw DomainError("regge_roots: empty mu grid");
  const auto seeds = bound_states(w, mu_grid[0], opt.kappa_floor);
  ReggeOptions o = opt;
  if (o.kappa_max == 0.0) o.kappa_max = std::sqrt(std::max(w.V0, 1.0)) * 10.0;
  return regge_trace(
      [&](double kappa, double mu) { return jost_function_analytic(w, {0.0, kappa}, mu).real(); },
      mu_grid, seeds, o);
}

}  // namespace anyon::well
