#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature for complex-valued integrands.

#include <complex>
#include <functional>

namespace anyon::num {

using cplx = std::complex<double>;

struct QuadResult {
  cplx value;
  double error;  // estimated absolute error
  int evaluations;
  bool converged;
};

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_intervals = 4000;
};

/// Integral of f over [a, b]; a > b allowed (sign flips).
QuadResult integrate(const std::function<cplx(double)>& f, double a, double b,
                     const QuadOptions& opt = {});

/// Integral of f along the straight segment from z0 to z1 in the complex plane.
QuadResult integrate_segment(const std::function<cplx(cplx)>& f, cplx z0, cplx z1,
                             const QuadOptions& opt = {});

/// As integrate(), but throws ConvergenceError when the tolerance is missed.
cplx integrate_checked(const std::function<cplx(double)>& f, double a, double b,
                       const QuadOptions& opt = {});

}  // namespace anyon::num
