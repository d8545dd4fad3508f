#include "anyon/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/cos_pi.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include "anyon/errors.hpp"
#include "anyon/free_theory.hpp"

namespace anyon {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int kMaxChannels = 64;
constexpr int kStartChannels = 4;

void check_theta(double theta) {
  if (!(theta > 0.0 && theta < pi) || std::sin(theta) < 1e-12)
    throw DomainError("cross-section: angle must lie strictly inside (0, pi)");
}

cplx channel_coefficient(double alpha, int m, double k, const PhaseProvider& phase) {
  const double mu = std::abs(2.0 * m + alpha);
  const double delta = phase(k, mu);
  if (!std::isfinite(delta))
    throw ConvergenceError("phase provider returned a non-finite phase at mu = " + std::to_string(mu),
                           std::numeric_limits<double>::infinity());
  const cplx rot(boost::math::cos_pi(mu), -boost::math::sin_pi(mu));
  return rot * partial_wave_amplitude(k, delta);
}

// Geometric continuation of the last three magnitudes on one side.
double side_tail(double a2, double a1, double a0) {
  if (a0 == 0.0 && a1 == 0.0) return 0.0;
  if (a0 == 0.0) return 0.0;
  const double r1 = a1 > 0.0 ? a0 / a1 : std::numeric_limits<double>::infinity();
  const double r2 = a2 > 0.0 ? a1 / a2 : std::numeric_limits<double>::infinity();
  const double rho = std::max(r1, r2);
  if (!(rho < 0.95)) return std::numeric_limits<double>::infinity();
  return a0 * rho / (1.0 - rho);
}

struct Builder {
  double alpha, k;
  const PhaseProvider& phase;
  std::vector<cplx> pos, neg;  // pos[j] for m = j, neg[j] for m = -j (neg[0] unused)

  void extend(int M) {
    while (static_cast<int>(pos.size()) <= M) {
      const int j = static_cast<int>(pos.size());
      pos.push_back(channel_coefficient(alpha, j, k, phase));
      neg.push_back(j == 0 ? cplx(0.0) : channel_coefficient(alpha, -j, k, phase));
    }
  }

  double tail(int M) const {
    const auto a = [](const std::vector<cplx>& v, int j) { return j >= 0 ? std::abs(v[j]) : 0.0; };
    return side_tail(a(pos, M - 2), a(pos, M - 1), a(pos, M)) +
           side_tail(M - 2 >= 1 ? a(neg, M - 2) : 0.0, M - 1 >= 1 ? a(neg, M - 1) : 0.0, a(neg, M));
  }
};

}  // namespace

cplx partial_wave_amplitude(double k, double delta) {
  const cplx s(std::cos(delta), std::sin(delta));
  return cplx(0.0, 2.0) * std::sin(delta) * s * amplitude_prefactor(k);
}

ChannelSum channel_sum(double alpha, double k, const PhaseProvider& phase, int m_max, double tol) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("statistics parameter alpha must lie in [0, 1]");
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("scattering amplitude: k must be positive");
  if (m_max > 4096) throw DomainError("scattering amplitude: m_max too large");
  Builder b{alpha, k, phase, {}, {}};
  int M;
  double tail;
  if (m_max > 0) {
    M = m_max;
    b.extend(M);
    tail = b.tail(M);
  } else {
    M = kStartChannels;
    b.extend(M);
    tail = b.tail(M);
    while (tail > tol && M < kMaxChannels) {
      M = std::min(kMaxChannels, M + kStartChannels);
      b.extend(M);
      tail = b.tail(M);
    }
  }
  if (!(tail <= tol))
    throw ConvergenceError("scattering amplitude: channel truncation at m_max = " + std::to_string(M) +
                               " leaves tail estimate above tolerance",
                           tail);
  ChannelSum s;
  s.alpha = alpha;
  s.k = k;
  s.m_max = M;
  s.tail = tail;
  for (int m = -M; m <= M; ++m) {
    s.m.push_back(m);
    s.c.push_back(m >= 0 ? b.pos[m] : b.neg[-m]);
  }
  return s;
}

cplx scattering_amplitude(const ChannelSum& channels, double Theta) {
  cplx f = 0.0;
  // Sum from the outer channels inward.
  for (std::size_t i = 0; i < channels.m.size(); ++i) {
    const std::size_t a = i / 2;
    const std::size_t j = (i % 2 == 0) ? a : channels.m.size() - 1 - a;
    if (channels.c[j] == 0.0) continue;
    const double ph = 2.0 * channels.m[j] * Theta;
    f += channels.c[j] * cplx(std::cos(ph), std::sin(ph));
  }
  return f;
}

cplx scattering_amplitude(double alpha, double k, double Theta, const PhaseProvider& phase,
                          int m_max, double tol) {
  return scattering_amplitude(channel_sum(alpha, k, phase, m_max, tol), Theta);
}

std::vector<double> default_theta_grid(int n, double lo_over_pi, double hi_over_pi) {
  if (n < 2) throw DomainError("theta grid needs at least two points");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i)
    g[i] = pi * (lo_over_pi + (hi_over_pi - lo_over_pi) * static_cast<double>(i) / (n - 1));
  return g;
}

CrossSectionTable differential_cross_section(double alpha, double k,
                                             const std::vector<double>& theta_grid,
                                             const PhaseProvider& phase, int m_max, double tol) {
  for (double t : theta_grid) check_theta(t);
  const ChannelSum ch = channel_sum(alpha, k, phase, m_max, tol);
  CrossSectionTable tab;
  tab.alpha = alpha;
  tab.k = k;
  tab.m_max = ch.m_max;
  tab.theta = theta_grid;
  double tail = 0.0;
  for (double t : theta_grid) {
    const cplx fa = scattering_amplitude(ch, t);
    const cplx fab = ab_amplitude(alpha, k, t).regular_part;
    const double mod = std::abs(fa + fab);
    tab.f_alpha.push_back(fa);
    tab.f_ab.push_back(fab);
    tab.dsigma.push_back(mod * mod);
    tail = std::max(tail, 2.0 * mod * ch.tail + ch.tail * ch.tail);
  }
  tab.tail_estimate = tail;
  return tab;
}

CrossSectionTable normalized_contact_cross_section(const contact::ContactExtension& ext, double k,
                                                   const std::vector<double>& theta_grid) {
  const double sa = boost::math::sin_pi(ext.alpha);
  if (!(ext.alpha > 0.0) || sa == 0.0)
    throw DomainError("normalized contact cross-section needs 0 < alpha < 1");
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("cross-section: k must be positive");
  for (double t : theta_grid) check_theta(t);
  const cplx rot(boost::math::cos_pi(ext.alpha), -boost::math::sin_pi(ext.alpha));
  const cplx fa = rot * contact::partial_amplitude(ext, k);
  CrossSectionTable tab;
  tab.alpha = ext.alpha;
  tab.k = k;
  tab.m_max = 0;
  tab.scale = 1.0 / (sa * sa);
  tab.theta = theta_grid;
  for (double t : theta_grid) {
    const cplx fab = ab_amplitude(ext.alpha, k, t).regular_part;
    const double mod = std::abs(fa + fab);
    tab.f_alpha.push_back(fa);
    tab.f_ab.push_back(fab);
    tab.dsigma.push_back(tab.scale * mod * mod);
  }
  return tab;
}

}  // namespace anyon
