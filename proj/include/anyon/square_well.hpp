#pragma once

// Attractive square well V = -V0 (r <= d) in closed form.

#include <complex>
#include <vector>

#include "anyon/jost.hpp"
#include "anyon/regge.hpp"

namespace anyon::well {

using cplx = std::complex<double>;

struct WellParams {
  double V0;
  double d;
  WellParams(double V0, double d);
};

/// q = sqrt(k^2 + V0), real positive at real k, i sqrt(kappa^2 - V0) at k = i kappa
/// beyond the threshold kappa^2 = V0.
cplx inner_momentum(const WellParams& w, cplx k);

/// Jost function from matching the interior solution to chi0+ at r = d.
cplx jost_function_analytic(const WellParams& w, cplx k, double mu);

/// The numerator N and denominator D of tan(delta) = N / D at real k.
struct TanParts {
  double num, den;
};
TanParts tan_delta_parts(const WellParams& w, double k, double mu);

/// atan(N / D): the phase shift modulo pi in [-pi/2, pi/2], no continuity.
double phase_shift_raw(const WellParams& w, double k, double mu);

/// Phase shift at one momentum, continued from delta(inf) = 0.
double phase_shift(const WellParams& w, double k, double mu);

/// Continuous delta over a momentum grid, same anchor; endpoint limits as in
/// the jost engine.
PhaseShiftCurve phase_shift_curve(const WellParams& w, double mu, std::vector<double> k_grid);

/// f(k, mu) = (e^{2i delta} - 1) / sqrt(pi i k).
cplx partial_amplitude(const WellParams& w, double k, double mu);

/// Bound-state momenta at fixed mu (sign changes of F(i kappa, mu)).
std::vector<double> bound_states(const WellParams& w, double mu, double kappa_floor = 1e-8,
                                 int per_decade = 400);

/// Regge trajectories with the closed-form Jost function as root function.
std::vector<ReggeTrajectory> regge_roots(const WellParams& w, const std::vector<double>& mu_grid,
                                         const ReggeOptions& opt = {});

}  // namespace anyon::well
