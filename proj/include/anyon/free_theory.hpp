#pragma once

// Free two-anyon structures in relative coordinates: channels, improper
// eigenfunctions, resolvent and propagator kernels, Aharonov-Bohm scattering.
// Atomic units with reduced mass 1/2, so H0 = -Laplacian and E = k^2.

#include <complex>

#include "anyon/quadrature.hpp"

namespace anyon {

using cplx = std::complex<double>;

/// Angular-momentum channel m at statistics parameter alpha in [0, 1].
class AnyonChannel {
public:
  AnyonChannel(double alpha, int m);
  double alpha() const noexcept { return alpha_; }
  int m() const noexcept { return m_; }
  double mu() const noexcept;  // |2m + alpha|

private:
  double alpha_;
  int m_;
};

/// e^{2im theta} / sqrt(2 pi) * J_mu(sqrt(E) r).
cplx eigenfunction(const AnyonChannel& ch, double E, double r, double theta);

struct KernelSum {
  cplx value;
  double tail;     // estimate of the dropped channels |m| > m_max
  int m_max;
  bool converged;  // tail <= tol * max(|value|, tiny)
};

/// Partial channel sum of the free resolvent kernel <r,theta|(H0 - z)^{-1}|r',theta'>
/// with k = sqrt(z) taken on the sheet Im k > 0. z must lie off [0, inf).
KernelSum free_resolvent_kernel(double alpha, cplx z, double r, double theta, double rp,
                                double thetap, int m_max, double tol = 1e-10);

struct PropagatorPoint {
  double r, rp, theta, thetap, t;
  double rho() const { return r * rp / (2.0 * t); }
  double chi() const { return theta - thetap; }
};

/// I_alpha(rho, chi) = int_R exp(i rho cosh y) e^{-alpha y} / (1 - e^{-2y - 2i chi}) dy
/// for 0 < alpha < 1 and chi not in pi*Z.
cplx oscillatory_integral_I(double alpha, double rho, double chi,
                            const num::QuadOptions& opt = {1e-13, 1e-11, 20000});

/// Half-width of the real central segment used by oscillatory_integral_I.
double oscillatory_central_halfwidth(double alpha, double rho);

struct PropagatorParts {
  cplx k0;    // the flux-phase term
  cplx khat;  // the I_alpha term; exactly zero at alpha in {0, 1}
  cplx total() const { return k0 + khat; }
};

/// Kernel of exp(-i t H0(alpha)) between (r,theta) and (r',theta'); t != 0 and
/// theta != theta'.
PropagatorParts propagator_kernel(double alpha, const PropagatorPoint& p);

/// e^{i pi alpha} for 2m + alpha >= 0, e^{-i pi alpha} otherwise.
cplx ab_phase(const AnyonChannel& ch);

struct ABAmplitude {
  cplx regular_part;
  cplx forward_delta_coefficient;  // coefficient of delta(Theta), kept apart
  double k;
  double theta;
};

/// Aharonov-Bohm amplitude at Theta != 0 mod pi.
ABAmplitude ab_amplitude(double alpha, double k, double Theta);

/// sin^2(pi alpha) / (pi k) * (1 + cot^2 theta).
double ab_cross_section(double alpha, double k, double theta);

/// 1 / sqrt(pi i k) for k > 0, the common prefactor of partial amplitudes.
cplx amplitude_prefactor(double k);

}  // namespace anyon
