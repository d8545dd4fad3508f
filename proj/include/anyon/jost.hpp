#pragma once

// Regular and Jost solutions of the radial equation at real order mu > 0,
// the Jost function F(k, mu) = W(chi+, phi)/k, phase shifts, bound states
// and Levinson's theorem.
//
// Normalizations:
//   phi(r)  ~ sqrt(pi) (kr/2)^{mu+1/2} / Gamma(mu+1)      (r -> 0)
//   chi+(r) ~ exp(i(kr - pi mu/2 + pi/4))                  (r -> inf)
// W(f, g) = f g' - f' g.

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "anyon/potential.hpp"

namespace anyon {

using cplx = std::complex<double>;

struct JostOptions {
  double rtol = 1e-11;           // integrator tolerance
  int matching_points = 5;       // radii in the matching window
  double tail_tol = 1e-12;       // int_R^inf r|V| < tail_tol*|k| sets R_start
  double resonance_tol = 1e-6;   // relative |F(k_min)| threshold
  double kappa_floor = 1e-8;     // smallest bound-state momentum resolved
  int scan_per_decade = 400;     // bound-state scan density
};

struct RadialSolution {
  enum class Kind { regular, jost_plus };
  Kind kind;
  cplx k;
  double mu;
  std::vector<double> grid;
  std::vector<cplx> values;
  std::vector<cplx> derivatives;
};

/// Free solutions phi0 = sqrt(pi k r/2) J_mu(kr), chi0+ = i sqrt(pi k r/2) H1_mu(kr),
/// returned as (value, d/dr).
std::pair<cplx, cplx> free_regular(cplx k, double nu, double r);
std::pair<cplx, cplx> free_jost(cplx k, double nu, double r);

/// Regular solution on an increasing grid of positive radii.
RadialSolution regular_solution(const RadialPotential& V, cplx k, double mu,
                                const std::vector<double>& grid, const JostOptions& opt = {});
/// Uniform grid of n points on (0, r_max].
RadialSolution regular_solution(const RadialPotential& V, cplx k, double mu, double r_max,
                                int n = 200, const JostOptions& opt = {});

/// Jost solution chi+ on a grid of positive radii (any order); Im k >= 0.
RadialSolution jost_solution(const RadialPotential& V, cplx k, double mu,
                             const std::vector<double>& grid, const JostOptions& opt = {});
/// Uniform grid of n points on [r_min, support].
RadialSolution jost_solution(const RadialPotential& V, cplx k, double mu, double r_min,
                             int n = 200, const JostOptions& opt = {});

struct JostEvaluation {
  cplx F;
  cplx k;
  double mu;
  double wronskian_residual;  // max |W(r_i)/k - F| over the matching radii
  std::vector<double> matching_radii;
};

JostEvaluation jost_function(const RadialPotential& V, cplx k, double mu,
                             const JostOptions& opt = {});

/// F = 1 + (1/k) int_0^R chi0+(r) V(r) phi(r) dr for finite-support V.
cplx jost_function_integral(const RadialPotential& V, cplx k, double mu,
                            const JostOptions& opt = {});

/// Jost function at fixed mu as a function of momentum.
using JostProvider = std::function<cplx(cplx k)>;

struct PhaseShiftCurve {
  double mu;
  std::vector<double> k_grid;
  std::vector<double> delta;        // continuously unwrapped
  std::vector<cplx> jost;           // F(k) at the grid points
  double delta_at_zero;             // extrapolated delta(0+)
  double delta_at_infinity;         // extrapolated delta(inf)
};

/// delta(k) = -arg F(k), anchored at the largest momentum in (-pi/2, pi/2]
/// and continued downward. Steps above pi/2 between neighbours are bisected;
/// ConvergenceError if that does not resolve them.
PhaseShiftCurve phase_shift_curve(const JostProvider& F, double mu, std::vector<double> k_grid);
PhaseShiftCurve phase_shift_curve(const RadialPotential& V, double mu,
                                  std::vector<double> k_grid, const JostOptions& opt = {});

struct BoundStateScan {
  std::vector<double> kappas;         // increasing
  std::vector<std::string> warnings;  // suspected unresolved root pairs
};

/// Zeros of kappa -> G(kappa) (real part of F(i kappa)) on (lo, hi].
BoundStateScan bound_states(const std::function<double(double)>& G, double kappa_lo,
                            double kappa_hi, int per_decade = 400);
/// Default range (kappa_floor, sqrt(max(depth, 1)) * 10].
BoundStateScan bound_states(const RadialPotential& V, double mu, const JostOptions& opt = {});

struct LevinsonRecord {
  double lhs;         // delta(0+) - delta(inf)
  double rhs;         // pi n  or  pi (n + mu) at a resonance with mu < 1
  int n_bound;
  bool resonance;
  double alpha_hat;   // (lhs/pi - n) mod 1 on the resonance branch, else NaN
  double delta_zero;
  double delta_infinity;
};

/// Levinson check from a Jost provider and a bound-state count. The phase is
/// sampled on a log grid over [k_min, k_max].
LevinsonRecord levinson_check(const JostProvider& F, double mu, int n_bound,
                              const JostOptions& opt = {}, double k_min = 1e-4,
                              double k_max = 1e3, int per_decade = 60);
LevinsonRecord levinson_check(const RadialPotential& V, double mu, const JostOptions& opt = {});

/// Log-spaced grid with `per_decade` points per decade, endpoints included.
std::vector<double> log_grid(double lo, double hi, int per_decade);

}  // namespace anyon
