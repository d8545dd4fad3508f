#pragma once

// Spherically symmetric potentials V(r) for the radial equation
//   u'' = [(mu^2 - 1/4)/r^2 + V(r) - k^2] u.

#include <string>
#include <utility>
#include <vector>

namespace anyon {

class RadialPotential {
public:
  enum class Kind { free, square_well, exponential, tabulated };

  static RadialPotential free();
  /// V = -V0 for r <= d, 0 outside. V0 > 0 is attractive.
  static RadialPotential square_well(double V0, double d);
  /// V = -V0 exp(-r/a).
  static RadialPotential exponential(double V0, double a);
  /// Linear interpolation on a strictly increasing grid starting at r > 0;
  /// constant below the first sample, zero beyond the last.
  static RadialPotential tabulated(std::vector<double> r, std::vector<double> v,
                                   std::string source = {});
  /// Two-column text file (r, V); lines starting with '#' are comments.
  static RadialPotential load(const std::string& path);
  /// "free", "square-well:V0=25,d=1", "exponential:V0=1,a=2", "file:path".
  static RadialPotential parse(const std::string& spec);

  Kind kind() const { return kind_; }
  double operator()(double r) const;

  bool finite_support() const { return kind_ != Kind::exponential; }
  /// Radius beyond which V vanishes (nominal 1 for the free case).
  double support_radius() const;
  /// Smallest R with int_R^inf r|V| dr <= tol.
  double tail_radius(double tol) const;
  /// int_0^inf r|V| dr and int_0^inf r(1+r)|V| dr.
  double i1() const;
  double i2() const;
  /// max |V|; sets the scale of bound-state searches.
  double depth_scale() const;
  /// Radii in (0, support) where V or its derivative jumps.
  std::vector<double> breakpoints() const;
  /// Interval where regular and Jost solutions are matched.
  std::pair<double, double> matching_window() const;

  double depth() const { return V0_; }
  double radius() const { return d_; }
  const std::vector<double>& sample_r() const { return r_; }
  const std::vector<double>& sample_v() const { return v_; }
  const std::string& source() const { return source_; }

  /// Canonical spec string, parseable by parse() (file path for tabulated).
  std::string describe() const;

private:
  Kind kind_ = Kind::free;
  double V0_ = 0.0;
  double d_ = 0.0;  // well radius or exponential range
  std::vector<double> r_, v_;
  std::string source_;
};

}  // namespace anyon
