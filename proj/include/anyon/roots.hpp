#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace anyon::num {

/// Root of f in [a, b] where f(a), f(b) differ in sign (Brent: bisection,
/// secant and inverse quadratic steps). Throws ConvergenceError otherwise.
double brent(const std::function<double(double)>& f, double a, double b, double fa,
             double fb, double xtol, int max_iter = 300);

double brent(const std::function<double(double)>& f, double a, double b, double xtol,
             int max_iter = 300);

/// Minimum of f on [a, b] by golden section with parabolic steps (Brent).
std::pair<double, double> minimize(const std::function<double(double)>& f, double a,
                                   double b, double xtol, int max_iter = 300);

/// Brackets [x_i, x_{i+1}] of a sampled grid where f changes sign.
std::vector<std::pair<double, double>> sign_changes(const std::vector<double>& x,
                                                    const std::vector<double>& fx);

}  // namespace anyon::num
