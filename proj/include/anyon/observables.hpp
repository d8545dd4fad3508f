#pragma once

// Two-anyon scattering observables: partial-wave sums, the total amplitude
// f_alpha + f_AB and the differential cross-section on theta in (0, pi).

#include <complex>
#include <functional>
#include <vector>

#include "anyon/delta_model.hpp"

namespace anyon {

using cplx = std::complex<double>;

/// delta(k, mu) for the channel of order mu. Only e^{2i delta} is used, so a
/// value modulo pi is enough. Must be safe to call concurrently.
using PhaseProvider = std::function<double(double k, double mu)>;

/// (e^{2i delta} - 1) / sqrt(pi i k), formed as 2i sin(delta) e^{i delta}.
cplx partial_wave_amplitude(double k, double delta);

struct ChannelSum {
  double alpha = 0.0;
  double k = 0.0;
  std::vector<int> m;     // -m_max .. m_max
  std::vector<cplx> c;    // e^{-i pi |2m+alpha|} f(k, |2m+alpha|)
  int m_max = 0;
  double tail = 0.0;      // bound on |f_alpha| contributed by |m| > m_max
};

/// Channel coefficients. m_max > 0 fixes the truncation; m_max <= 0 grows it
/// until tail <= tol or 64 channels per side. Throws ConvergenceError when the
/// tail stays above tol.
ChannelSum channel_sum(double alpha, double k, const PhaseProvider& phase, int m_max = 0,
                       double tol = 1e-8);

/// f_alpha(k, Theta) = sum_m c_m e^{2im Theta}.
cplx scattering_amplitude(const ChannelSum& channels, double Theta);
cplx scattering_amplitude(double alpha, double k, double Theta, const PhaseProvider& phase,
                          int m_max = 0, double tol = 1e-8);

struct CrossSectionTable {
  double alpha = 0.0;
  double k = 0.0;
  std::vector<double> theta;
  std::vector<double> dsigma;  // scale * |f_alpha + f_ab|^2
  std::vector<cplx> f_alpha;
  std::vector<cplx> f_ab;      // regular part of the AB amplitude
  int m_max = 0;
  double tail_estimate = 0.0;  // bound on the change of dsigma from dropped channels
  double scale = 1.0;          // 1, or 1/sin^2(pi alpha) for normalized tables
};

/// Uniform grid of n angles on [lo, hi], by default 512 points on [0.01 pi, 0.99 pi].
std::vector<double> default_theta_grid(int n = 512, double lo_over_pi = 0.01,
                                       double hi_over_pi = 0.99);

/// dsigma/dtheta = |f_alpha + f_AB|^2; theta must lie strictly inside (0, pi).
CrossSectionTable differential_cross_section(double alpha, double k,
                                             const std::vector<double>& theta_grid,
                                             const PhaseProvider& phase, int m_max = 0,
                                             double tol = 1e-8);

/// Contact model: only m = 0 scatters. The table is normalized by
/// 1/sin^2(pi alpha), so alpha must lie in (0, 1).
CrossSectionTable normalized_contact_cross_section(const contact::ContactExtension& ext, double k,
                                                   const std::vector<double>& theta_grid);

}  // namespace anyon
