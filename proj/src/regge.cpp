#include "anyon/regge.hpp"

#include <algorithm>
#include <cmath>

#include "anyon/errors.hpp"
#include "anyon/roots.hpp"

namespace anyon {

namespace {

bool positive(double x) { return x > 0.0; }

struct Bracket {
  bool found;
  double lo, hi, glo, ghi;
};

// Walks away from `start` (where G has sign opposite to the root side) in
// log-steps of doubling length until the sign of G flips.
Bracket walk(const std::function<double(double)>& g, double start, double gstart, double gap,
             double dir, double limit) {
  double a = start, ga = gstart;
  for (int it = 0; it < 200; ++it) {
    double b = a * std::exp(dir * gap);
    bool last = false;
    if ((dir < 0.0 && b <= limit) || (dir > 0.0 && limit > 0.0 && b >= limit)) {
      b = limit;
      last = true;
    }
    const double gb = g(b);
    if (positive(gb) != positive(ga) || gb == 0.0)
      return dir < 0.0 ? Bracket{true, b, a, gb, ga} : Bracket{true, a, b, ga, gb};
    if (last) break;
    a = b;
    ga = gb;
    gap *= 2.0;
  }
  return {false, 0.0, 0.0, 0.0, 0.0};
}

}  // namespace

std::vector<ReggeTrajectory> regge_trace(const ReggeFunction& G, const std::vector<double>& mu_grid,
                                         std::vector<double> seeds, const ReggeOptions& opt) {
  if (mu_grid.empty()) throw DomainError("regge_trace: empty mu grid");
  for (std::size_t i = 1; i < mu_grid.size(); ++i)
    if (!(mu_grid[i] > mu_grid[i - 1])) throw DomainError("regge_trace: mu grid must increase");
  std::sort(seeds.begin(), seeds.end(), std::greater<>());

  std::vector<ReggeTrajectory> out;
  int id = 0;
  for (double seed : seeds) {
    ReggeTrajectory tr;
    tr.id = ++id;
    tr.points.push_back({mu_grid[0], seed});
    // Sign of G just above the root; continuous in mu while the root is simple.
    bool above = positive(G(seed * (1.0 + 1e-7), mu_grid[0]));
    for (std::size_t i = 1; i < mu_grid.size(); ++i) {
      const double mu = mu_grid[i];
      const ReggePoint& p1 = tr.points.back();
      double pred = p1.kappa;
      if (tr.points.size() >= 2) {
        const ReggePoint& p0 = tr.points[tr.points.size() - 2];
        pred = p1.kappa + (p1.kappa - p0.kappa) * (mu - p1.mu) / (p1.mu - p0.mu);
      }
      auto g = [&](double kappa) { return G(kappa, mu); };
      const double g1 = g(p1.kappa);
      Bracket br;
      if (positive(g1) == above && g1 != 0.0) {
        // Root moved down.
        double gap = 1e-6;
        if (pred > opt.kappa_floor && pred < p1.kappa) gap = std::max(gap, 0.5 * std::log(p1.kappa / pred));
        br = walk(g, p1.kappa, g1, gap, -1.0, opt.kappa_floor);
        if (!br.found) {
          tr.terminated = true;
          const double ga = G(opt.kappa_floor, p1.mu), gb = G(opt.kappa_floor, mu);
          if (positive(ga) != positive(gb)) {
            tr.termination_mu = num::brent([&](double m) { return G(opt.kappa_floor, m); }, p1.mu,
                                           mu, ga, gb, 1e-12);
          } else {
            tr.termination_mu = 0.5 * (p1.mu + mu);
            tr.note = "termination not bracketed at kappa_floor";
          }
          break;
        }
      } else {
        tr.monotone = false;
        br = walk(g, p1.kappa, g1, 1e-6, 1.0, opt.kappa_max);
        if (!br.found) {
          tr.truncated = true;
          tr.note = "root lost while searching upward at mu=" + std::to_string(mu);
          break;
        }
      }
      double kappa;
      try {
        kappa = num::brent(g, br.lo, br.hi, br.glo, br.ghi, 1e-13 * br.lo);
      } catch (const ConvergenceError&) {
        tr.truncated = true;
        tr.note = "corrector diverged at mu=" + std::to_string(mu);
        break;
      }
      if (!(kappa < p1.kappa)) tr.monotone = false;
      above = positive(br.ghi);
      tr.points.push_back({mu, kappa});
    }
    out.push_back(std::move(tr));
  }
  return out;
}

std::vector<ReggeTrajectory> regge_trace(const RadialPotential& V, const std::vector<double>& mu_grid,
                                         const JostOptions& opt) {
  if (mu_grid.empty()) throw DomainError("regge_trace: empty mu grid");
  const auto seeds = bound_states(V, mu_grid[0], opt).kappas;
  ReggeOptions ro;
  ro.kappa_floor = opt.kappa_floor;
  ro.kappa_max = std::sqrt(std::max(V.depth_scale(), 1.0)) * 10.0;
  return regge_trace([&](double kappa, double mu) {
                       return jost_function(V, {0.0, kappa}, mu, opt).F.real();
                     },
                     mu_grid, seeds, ro);
}

}  // namespace anyon
