#pragma once

#include <stdexcept>
#include <string>

namespace anyon {

/// Invalid argument outside an operation's mathematical domain (negative
/// order below -1, forward scattering angle, wrong sheet, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A numerical procedure (quadrature, ODE, root search, channel sum) did not
/// reach its tolerance. `achieved` carries the best error estimate obtained.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

private:
  double achieved_;
};

/// Result does not fit into double precision.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

}  // namespace anyon
