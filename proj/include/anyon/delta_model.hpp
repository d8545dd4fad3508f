#pragma once

// Contact (delta) interaction in the m = 0 channel: the self-adjoint
// extensions h(s) of the radial operator with centrifugal order alpha,
// boundary condition lim W(G_alpha + s F_alpha, psi) = 0 at r -> 0.

#include <complex>

namespace anyon::contact {

using cplx = std::complex<double>;

/// Statistics parameter alpha in [0, 1) and extension parameter s; s = +-inf
/// is the Friedrichs extension (no interaction).
struct ContactExtension {
  double alpha;
  double s;
  ContactExtension(double alpha, double s);
  bool is_free() const noexcept;
};

/// Below this alpha the logarithmic (bosonic) formulas are used.
inline constexpr double kBosonicCrossover = 1e-8;

/// Rank-one coefficient A(k, alpha; s) of the resolvent. Im k >= 0 and k != 0;
/// real k is accepted as the boundary value from the upper half plane.
cplx coefficient_A(const ContactExtension& ext, cplx k);

/// (i pi/2) sqrt(r r') J_a(k r<) H_a(k r>) - A sqrt(r r') H_a(k r) H_a(k r').
cplx resolvent_kernel(const ContactExtension& ext, cplx k, double r, double rp);

struct ContactBoundState {
  bool exists = false;
  bool degenerate = false;  // 1 - 2 alpha s = 0: k_b = 0, no bound state
  cplx k_b{0.0, 0.0};
  double E_b = 0.0;
  double alpha = 0.0;
  /// Normalized radial wavefunction, zero when no bound state exists.
  double operator()(double r) const;
};

ContactBoundState bound_state(const ContactExtension& ext);

/// Real a(k) with e^{2i delta} = (a + i)/(a - i); +-inf for the free case.
double phase_function(const ContactExtension& ext, double k);

/// delta = arg(a + i) in (0, pi); identically 0 for s = +-inf.
double phase_shift(const ContactExtension& ext, double k);

/// (4i/pi) A / sqrt(pi i k).
cplx partial_amplitude(const ContactExtension& ext, double k);

struct ContactLevinson {
  double delta_zero;
  double delta_infinity;
  double lhs;        // delta(0+) - delta(inf)
  int n;             // number of bound states
  double alpha_hat;  // (n - lhs/pi) mod 1; NaN when free or degenerate
  bool degenerate;
};

ContactLevinson levinson_relation(const ContactExtension& ext);

}  // namespace anyon::contact
