#include "anyon/jost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "anyon/errors.hpp"
#include "anyon/ode.hpp"
#include "anyon/roots.hpp"
#include "anyon/specfun.hpp"

namespace anyon {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

using State2 = num::OdeState<2>;

void check_order(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("radial order mu must be > 0");
}

void check_momentum(cplx k) {
  if (k == 0.0 || !std::isfinite(k.real()) || !std::isfinite(k.imag()))
    throw DomainError("momentum k must be finite and nonzero");
}

// V restricted to one smooth piece, so RK stages at a piece boundary see the
// one-sided value.
struct Piece {
  const RadialPotential* V;
  double lo, hi;
  double operator()(double r) const {
    const double pad = 1e-13 * (hi - lo);
    return (*V)(std::clamp(r, lo + pad, hi - pad));
  }
};

// u = r^{mu+1/2} w, w'' + (2mu+1)/r w' = (V - k^2) w.
struct LiouvilleSystem {
  Piece v;
  double mu;
  cplx k2;
  double omega0;
  void rhs(double r, const State2& y, State2& dy) const {
    dy[0] = y[1];
    dy[1] = -(2.0 * mu + 1.0) / r * y[1] + (v(r) - k2) * y[0];
  }
  double amplitude(double r, const State2& y) const {
    return std::abs(y[0]) + std::abs(y[1]) / (omega0 + (mu + 1.0) / r);
  }
};

// chi = e^{ikr} y, y'' = -2ik y' + ((mu^2 - 1/4)/r^2 + V) y.
struct OutgoingSystem {
  Piece v;
  double c;  // mu^2 - 1/4
  cplx k;
  double omega0;
  void rhs(double r, const State2& y, State2& dy) const {
    dy[0] = y[1];
    dy[1] = -2.0 * I * k * y[1] + (c / (r * r) + v(r)) * y[0];
  }
  double amplitude(double r, const State2& y) const {
    return std::abs(y[0]) + std::abs(y[1]) / (omega0 + (std::abs(c) + 1.0) / r);
  }
};

double start_radius(cplx k) { return std::min(1e-4, 1e-3 / std::abs(k)); }

// log of sqrt(pi) (k/2)^{mu+1/2} / Gamma(mu+1)
cplx log_regular_norm(cplx k, double mu) {
  return 0.5 * std::log(pi) + (mu + 0.5) * std::log(0.5 * k) - std::lgamma(mu + 1.0);
}

// Pieces of (lo, hi) split at the potential's breakpoints.
std::vector<double> piece_edges(const RadialPotential& V, double lo, double hi) {
  std::vector<double> e{lo};
  for (double b : V.breakpoints())
    if (b > lo && b < hi) e.push_back(b);
  e.push_back(hi);
  return e;
}

// Integrate a system from x0 to x1 stopping at every piece edge in between.
template <class Make>
State2 march(const RadialPotential& V, double x0, double x1, State2 y, const Make& make,
             const num::OdeOptions& o) {
  if (x0 == x1) return y;
  const double lo = std::min(x0, x1), hi = std::max(x0, x1);
  std::vector<double> edges = piece_edges(V, lo, hi);
  if (x1 < x0) std::reverse(edges.begin(), edges.end());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i], b = edges[i + 1];
    const auto sys = make(Piece{&V, std::min(a, b), std::max(a, b)});
    num::OdeOptions oi = o;
    oi.h_init = 0.0;
    if (x1 > x0 && a > 0.0) oi.h_init = std::min(0.05 * a, std::abs(b - a));
    y = num::integrate_dp5<2>(sys, a, b, y, oi);
  }
  return y;
}

double omega_scale(const RadialPotential& V, cplx k) {
  return std::abs(k) + std::sqrt(V.depth_scale());
}

}  // namespace

std::pair<cplx, cplx> free_regular(cplx k, double nu, double r) {
  const cplx z = k * r;
  const cplx s = std::sqrt(0.5 * pi * z);
  const cplx j = specfun::bessel_j(nu, z);
  const cplx jp = specfun::bessel_j_prime(nu, z);
  return {s * j, s * (j / (2.0 * r) + k * jp)};
}

std::pair<cplx, cplx> free_jost(cplx k, double nu, double r) {
  const cplx z = k * r;
  const cplx s = I * std::sqrt(0.5 * pi * z);
  const cplx h = specfun::hankel1(nu, z);
  const cplx hp = specfun::hankel1_prime(nu, z);
  return {s * h, s * (h / (2.0 * r) + k * hp)};
}

RadialSolution regular_solution(const RadialPotential& V, cplx k, double mu,
                                const std::vector<double>& grid, const JostOptions& opt) {
  check_order(mu);
  check_momentum(k);
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1])))
      throw DomainError("regular_solution: grid must be positive and increasing");

  RadialSolution out{RadialSolution::Kind::regular, k, mu, grid, {}, {}};
  const cplx k2 = k * k;
  const double r0 = start_radius(k);
  const cplx a = (V(0.0) - k2) / (4.0 * (mu + 1.0));
  const cplx lognorm = log_regular_norm(k, mu);
  const double om = omega_scale(V, k);
  auto make = [&](Piece p) { return LiouvilleSystem{p, mu, k2, om}; };
  num::OdeOptions o;
  o.rtol = opt.rtol;

  State2 y{1.0 + a * r0 * r0, 2.0 * a * r0};
  double x = r0;
  for (double r : grid) {
    State2 w;
    if (r <= r0) {
      w = {1.0 + a * r * r, 2.0 * a * r};
    } else {
      y = march(V, x, r, y, make, o);
      x = r;
      w = y;
    }
    const cplx scale = std::exp(lognorm + (mu + 0.5) * std::log(r));
    out.values.push_back(scale * w[0]);
    out.derivatives.push_back(scale * (w[1] + (mu + 0.5) / r * w[0]));
  }
  return out;
}

RadialSolution regular_solution(const RadialPotential& V, cplx k, double mu, double r_max, int n,
                                const JostOptions& opt) {
  if (!(r_max > 0.0) || n < 1) throw DomainError("regular_solution: need r_max > 0, n >= 1");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = r_max * (i + 1) / n;
  return regular_solution(V, k, mu, g, opt);
}

namespace {

double jost_start(const RadialPotential& V, cplx k, const JostOptions& opt) {
  if (V.finite_support()) return V.support_radius();
  return std::max(V.tail_radius(opt.tail_tol * std::abs(k)), V.matching_window().second);
}

}  // namespace

RadialSolution jost_solution(const RadialPotential& V, cplx k, double mu,
                             const std::vector<double>& grid, const JostOptions& opt) {
  check_order(mu);
  check_momentum(k);
  if (k.imag() < 0.0) throw DomainError("jost_solution: requires Im k >= 0");
  for (double r : grid)
    if (!(r > 0.0)) throw DomainError("jost_solution: radii must be positive");

  RadialSolution out{RadialSolution::Kind::jost_plus, k, mu, grid, {}, {}};
  out.values.resize(grid.size());
  out.derivatives.resize(grid.size());
  const double R = jost_start(V, k, opt);

  // Visit radii from the outside in.
  std::vector<std::size_t> order(grid.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return grid[a] > grid[b]; });

  const cplx eR = std::exp(-I * k * R);
  const auto [c0, c0p] = free_jost(k, mu, R);
  State2 y{c0 * eR, (c0p - I * k * c0) * eR};
  double x = R;
  const double c = mu * mu - 0.25;
  const double om = omega_scale(V, k);
  auto make = [&](Piece p) { return OutgoingSystem{p, c, k, om}; };
  num::OdeOptions o;
  o.rtol = opt.rtol;
  for (std::size_t idx : order) {
    const double r = grid[idx];
    if (r >= R) {
      const auto [v, d] = free_jost(k, mu, r);
      out.values[idx] = v;
      out.derivatives[idx] = d;
      continue;
    }
    y = march(V, x, r, y, make, o);
    x = r;
    const cplx e = std::exp(I * k * r);
    out.values[idx] = e * y[0];
    out.derivatives[idx] = e * (y[1] + I * k * y[0]);
  }
  return out;
}

RadialSolution jost_solution(const RadialPotential& V, cplx k, double mu, double r_min, int n,
                             const JostOptions& opt) {
  const double R = std::max(jost_start(V, k, opt), r_min);
  if (!(r_min > 0.0) || n < 2) throw DomainError("jost_solution: need r_min > 0, n >= 2");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = r_min + (R - r_min) * i / (n - 1);
  return jost_solution(V, k, mu, g, opt);
}

JostEvaluation jost_function(const RadialPotential& V, cplx k, double mu, const JostOptions& opt) {
  check_order(mu);
  check_momentum(k);
  if (k.imag() < 0.0) throw DomainError("jost_function: requires Im k >= 0");
  const auto [lo, hi] = V.matching_window();
  const int n = std::max(1, opt.matching_points);
  if (!(hi > lo)) throw DomainError("jost_function: empty matching window");
  std::vector<double> radii(n);
  for (int i = 0; i < n; ++i) radii[i] = n == 1 ? hi : lo + (hi - lo) * i / (n - 1);

  const RadialSolution phi = regular_solution(V, k, mu, radii, opt);
  const RadialSolution chi = jost_solution(V, k, mu, radii, opt);
  std::vector<cplx> f(n);
  cplx mean = 0.0;
  for (int i = 0; i < n; ++i) {
    f[i] = (chi.values[i] * phi.derivatives[i] - chi.derivatives[i] * phi.values[i]) / k;
    mean += f[i];
  }
  mean /= double(n);
  double res = 0.0;
  for (const cplx& fi : f) res = std::max(res, std::abs(fi - mean));
  if (!std::isfinite(mean.real()) || !std::isfinite(mean.imag()))
    throw ConvergenceError("jost_function: non-finite Wronskian", HUGE_VAL);
  return {mean, k, mu, res, radii};
}

cplx jost_function_integral(const RadialPotential& V, cplx k, double mu, const JostOptions& opt) {
  check_order(mu);
  check_momentum(k);
  if (!V.finite_support())
    throw DomainError("integral representation needs a finite-support potential");
  if (V.kind() == RadialPotential::Kind::free) return 1.0;
  // Gauss-Kronrod 15 on equal panels of each smooth piece; phi at all nodes
  // from one outward integration.
  static constexpr double xk[8] = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.0};
  static constexpr double wk[8] = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  const double R = V.support_radius();
  const std::vector<double> edges = piece_edges(V, 0.0, R);
  std::vector<double> nodes, weights;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p], b = edges[p + 1];
    const int panels = std::max(16, int(std::ceil(4.0 * (std::abs(k) + std::sqrt(V.depth_scale())) * (b - a))));
    for (int j = 0; j < panels; ++j) {
      const double pa = a + (b - a) * j / panels, pb = a + (b - a) * (j + 1) / panels;
      const double c = 0.5 * (pa + pb), h = 0.5 * (pb - pa);
      for (int q = 0; q < 7; ++q) {
        nodes.push_back(c - h * xk[q]);
        weights.push_back(h * wk[q]);
      }
      nodes.push_back(c);
      weights.push_back(h * wk[7]);
      for (int q = 6; q >= 0; --q) {
        nodes.push_back(c + h * xk[q]);
        weights.push_back(h * wk[q]);
      }
    }
  }
  const RadialSolution phi = regular_solution(V, k, mu, nodes, opt);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double r = nodes[i];
    // V is evaluated strictly inside its piece.
    const auto it = std::upper_bound(edges.begin(), edges.end(), r);
    const Piece pc{&V, *(it - 1), *it};
    sum += weights[i] * free_jost(k, mu, r).first * pc(r) * phi.values[i];
  }
  return 1.0 + sum / k;
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(hi > lo) || per_decade < 1) throw DomainError("log_grid: need 0 < lo < hi");
  const int n = int(std::ceil(per_decade * std::log10(hi / lo))) + 1;
  std::vector<double> g(n);
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = lo * std::exp(step * i);
  g.front() = lo;
  g.back() = hi;
  return g;
}

PhaseShiftCurve phase_shift_curve(const JostProvider& F, double mu, std::vector<double> k_grid) {
  if (k_grid.empty()) throw DomainError("phase_shift_curve: empty grid");
  std::sort(k_grid.begin(), k_grid.end());
  for (std::size_t i = 0; i < k_grid.size(); ++i)
    if (!(k_grid[i] > 0.0) || (i > 0 && k_grid[i] == k_grid[i - 1]))
      throw DomainError("phase_shift_curve: momenta must be positive and distinct");
  const std::size_t n = k_grid.size();
  PhaseShiftCurve c{mu, k_grid, std::vector<double>(n), std::vector<cplx>(n), 0.0, 0.0};
  std::vector<double> raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.jost[i] = F(k_grid[i]);
    raw[i] = -std::arg(c.jost[i]);
  }
  double top = raw[n - 1] - pi * std::round(raw[n - 1] / pi);
  if (top <= -0.5 * pi) top += pi;
  c.delta[n - 1] = top;
  // Change of -arg F from k_hi down to k_lo, bisecting (geometric midpoints)
  // while a step exceeds pi/2.
  std::function<double(double, double, double, double, int)> track =
      [&](double klo, double rlo, double khi, double rhi, int depth) -> double {
    const double jump = std::remainder(rlo - rhi, 2.0 * pi);
    if (std::abs(jump) <= 0.5 * pi) return jump;
    if (depth >= 40)
      throw ConvergenceError("phase_shift_curve: phase jump above pi/2 between k=" +
                                 std::to_string(klo) + " and " + std::to_string(khi),
                             std::abs(jump));
    const double km = std::sqrt(klo * khi);
    const double rm = -std::arg(F(km));
    return track(klo, rlo, km, rm, depth + 1) + track(km, rm, khi, rhi, depth + 1);
  };
  for (std::size_t i = n - 1; i-- > 0;)
    c.delta[i] = c.delta[i + 1] + track(k_grid[i], raw[i], k_grid[i + 1], raw[i + 1], 0);
  if (n >= 2) {
    const double p = std::min(2.0 * mu, 2.0);
    const double a = std::pow(k_grid[0], p), b = std::pow(k_grid[1], p);
    const double slope = (c.delta[1] - c.delta[0]) / (b - a);
    c.delta_at_zero = c.delta[0] - slope * a;
    const double u = 1.0 / k_grid[n - 1], v = 1.0 / k_grid[n - 2];
    const double s2 = (c.delta[n - 1] - c.delta[n - 2]) / (u - v);
    c.delta_at_infinity = c.delta[n - 1] - s2 * u;
  } else {
    c.delta_at_zero = c.delta_at_infinity = c.delta[0];
  }
  return c;
}

PhaseShiftCurve phase_shift_curve(const RadialPotential& V, double mu, std::vector<double> k_grid,
                                  const JostOptions& opt) {
  return phase_shift_curve([&](cplx k) { return jost_function(V, k, mu, opt).F; }, mu,
                           std::move(k_grid));
}

BoundStateScan bound_states(const std::function<double(double)>& G, double kappa_lo,
                            double kappa_hi, int per_decade) {
  BoundStateScan out;
  if (!(kappa_hi > kappa_lo)) return out;
  const std::vector<double> x = log_grid(kappa_lo, kappa_hi, per_decade);
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = G(x[i]);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if ((g[i] > 0.0) != (g[i + 1] > 0.0) || g[i] == 0.0) {
      if (g[i] == 0.0) {
        if (i > 0) out.kappas.push_back(x[i]);
        continue;
      }
      if (g[i + 1] == 0.0) continue;
      out.kappas.push_back(num::brent(G, x[i], x[i + 1], g[i], g[i + 1], 1e-13 * x[i]));
    } else if (i > 0) {
      // Slope reversal with a deep dip and no sign change: a root pair may
      // hide between grid points.
      const double dl = g[i] - g[i - 1], dr = g[i + 1] - g[i];
      const bool turn = (dl > 0.0) != (dr > 0.0);
      const double near = std::min(std::abs(g[i - 1]), std::abs(g[i + 1]));
      if (turn && std::abs(g[i]) < 1e-3 * near && (g[i] > 0.0) == (dl < 0.0))
        out.warnings.push_back("possible unresolved root pair near kappa=" + std::to_string(x[i]));
    }
  }
  return out;
}

BoundStateScan bound_states(const RadialPotential& V, double mu, const JostOptions& opt) {
  check_order(mu);
  if (V.kind() == RadialPotential::Kind::free) return {};
  const double hi = std::sqrt(std::max(V.depth_scale(), 1.0)) * 10.0;
  return bound_states([&](double kappa) { return jost_function(V, cplx(0.0, kappa), mu, opt).F.real(); },
                      opt.kappa_floor, hi, opt.scan_per_decade);
}

LevinsonRecord levinson_check(const JostProvider& F, double mu, int n_bound, const JostOptions& opt,
                              double k_min, double k_max, int per_decade) {
  check_order(mu);
  const PhaseShiftCurve c = phase_shift_curve(F, mu, log_grid(k_min, k_max, per_decade));
  LevinsonRecord rec;
  rec.delta_zero = c.delta_at_zero;
  rec.delta_infinity = c.delta_at_infinity;
  rec.lhs = c.delta_at_zero - c.delta_at_infinity;
  rec.n_bound = n_bound;
  rec.alpha_hat = std::numeric_limits<double>::quiet_NaN();

  std::size_t iref = 0;
  for (std::size_t i = 0; i < c.k_grid.size(); ++i)
    if (std::abs(std::log(c.k_grid[i])) < std::abs(std::log(c.k_grid[iref]))) iref = i;
  const double ratio = std::abs(c.jost.front()) / std::abs(c.jost[iref]);
  if (ratio > 0.1 * opt.resonance_tol && ratio < 10.0 * opt.resonance_tol)
    throw ConvergenceError("levinson_check: resonance test inconclusive", ratio);
  rec.resonance = ratio < opt.resonance_tol;
  rec.rhs = pi * n_bound;
  if (rec.resonance) {
    if (mu == std::round(mu))
      throw DomainError("levinson_check: zero-energy resonance at integer mu is not handled");
    if (mu < 1.0) {
      rec.rhs = pi * (n_bound + mu);
      const double x = rec.lhs / pi - n_bound;
      rec.alpha_hat = x - std::floor(x);
    }
  }
  return rec;
}

LevinsonRecord levinson_check(const RadialPotential& V, double mu, const JostOptions& opt) {
  const int n = int(bound_states(V, mu, opt).kappas.size());
  if (V.kind() == RadialPotential::Kind::free)
    return levinson_check([](cplx) { return cplx(1.0); }, mu, 0, opt);
  return levinson_check([&](cplx k) { return jost_function(V, k, mu, opt).F; }, mu, n, opt);
}

}  // namespace anyon
