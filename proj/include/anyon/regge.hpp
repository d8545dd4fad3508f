#pragma once

// Real Regge trajectories: zeros kappa_b(mu) of kappa -> F(i kappa, mu)
// followed in mu by predictor-corrector continuation.

#include <functional>
#include <string>
#include <vector>

#include "anyon/jost.hpp"
#include "anyon/potential.hpp"

namespace anyon {

struct ReggePoint {
  double mu;
  double kappa;
};

struct ReggeTrajectory {
  int id = 0;                 // 1 = deepest bound state at the first mu
  std::vector<ReggePoint> points;
  bool terminated = false;    // kappa_b reached kappa_floor inside the grid
  double termination_mu = 0.0;
  bool truncated = false;     // corrector lost the root
  bool monotone = true;       // kappa_b strictly decreasing along the trace
  std::string note;
};

struct ReggeOptions {
  double kappa_floor = 1e-8;
  double kappa_max = 0.0;  // 0: unbounded upward search
};

/// G(kappa, mu) is real on the positive imaginary axis (Re F(i kappa, mu)).
using ReggeFunction = std::function<double(double kappa, double mu)>;

std::vector<ReggeTrajectory> regge_trace(const ReggeFunction& G, const std::vector<double>& mu_grid,
                                         std::vector<double> seeds, const ReggeOptions& opt = {});

/// Seeds from the bound-state scan at mu_grid[0]; numeric Jost function.
std::vector<ReggeTrajectory> regge_trace(const RadialPotential& V, const std::vector<double>& mu_grid,
                                         const JostOptions& opt = {});

}  // namespace anyon
