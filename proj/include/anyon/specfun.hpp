#pragma once

// Cylinder functions of real order nu > -1 and complex argument.
//
// Branch convention: fractional powers z^nu use the principal logarithm, so
// for 0 < arg z <= pi (the resolvent sheet) all values are single valued.

#include <complex>
#include <numbers>
#include <utility>

namespace anyon::specfun {

using cplx = std::complex<double>;

/// Real cylinder order; construction rejects nu <= -1 and non-finite values.
class CylinderOrder {
public:
  CylinderOrder(double nu);  // NOLINT: implicit on purpose, validated
  double value() const noexcept { return nu_; }
  operator double() const noexcept { return nu_; }

private:
  double nu_;
};

/// J, Y and H^(1) of one order at one argument, computed together.
struct CylinderValues {
  cplx j;
  cplx y;
  cplx h1;
};

/// Ascending series for |z| below this radius, Hankel asymptotics above.
inline constexpr double kSeriesRadius = 12.0;
/// Orders closer than this to an integer use the symmetric limit for Y.
inline constexpr double kIntegerWindow = 1e-6;

inline constexpr double euler_gamma = std::numbers::egamma;

CylinderValues cylinder(CylinderOrder nu, cplx z);

cplx bessel_j(CylinderOrder nu, cplx z);
cplx bessel_y(CylinderOrder nu, cplx z);
cplx hankel1(CylinderOrder nu, cplx z);
cplx hankel2(CylinderOrder nu, cplx z);

/// exp(-i z) H^(1)_nu(z); finite where H^(1) itself under/overflows.
cplx hankel1_scaled(CylinderOrder nu, cplx z);

// Derivatives with respect to the argument, via C'_nu = (nu/z) C_nu - C_{nu+1}.
cplx bessel_j_prime(CylinderOrder nu, cplx z);
cplx bessel_y_prime(CylinderOrder nu, cplx z);
cplx hankel1_prime(CylinderOrder nu, cplx z);

/// (I_nu(x), K_nu(x)) for x > 0.
std::pair<double, double> bessel_i_k(CylinderOrder nu, double x);
/// (I'_nu(x), K'_nu(x)).
std::pair<double, double> bessel_i_k_prime(CylinderOrder nu, double x);

/// Gamma function for real x; poles at non-positive integers are errors.
double gamma_real(double x);
/// 1/Gamma(x), entire; zero at the poles of Gamma.
double rgamma(double x);

}  // namespace anyon::specfun
