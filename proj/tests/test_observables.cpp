#include "doctest.h"

#include <cmath>

#include "anyon/delta_model.hpp"
#include "anyon/errors.hpp"
#include "anyon/free_theory.hpp"
#include "anyon/observables.hpp"
#include "anyon/square_well.hpp"
#include "oracles.hpp"

using namespace anyon;
using oracle::pi;

namespace {

const well::WellParams kW(25.0, 1.0);
const PhaseProvider kWell = [](double k, double mu) { return well::phase_shift_raw(kW, k, mu); };
const PhaseProvider kZero = [](double, double) { return 0.0; };

}  // namespace

TEST_CASE("vanishing phases give the pure AB cross-section") {
  const auto c = channel_sum(0.5, 1.0, kZero);
  for (const cplx x : c.c) CHECK(x == cplx(0.0));
  const auto t = differential_cross_section(0.5, 1.0, {0.3, pi / 2, 2.0}, kZero);
  CHECK(std::abs(t.dsigma[1] - 1.0 / pi) < 1e-15);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(t.f_alpha[i] == cplx(0.0));
    CHECK(std::abs(t.dsigma[i] - ab_cross_section(0.5, 1.0, t.theta[i])) < 1e-15);
  }
}

TEST_CASE("partial-wave amplitude") {
  for (double d : {0.0, 0.4, 1.3, -2.0}) {
    const cplx f = partial_wave_amplitude(2.0, d);
    CHECK(std::abs(f - (std::exp(cplx(0.0, 2.0 * d)) - 1.0) * amplitude_prefactor(2.0)) < 1e-15);
    CHECK(std::abs(partial_wave_amplitude(2.0, d + pi) - f) < 1e-15);
  }
}

TEST_CASE("contact model scatters only in m = 0") {
  const contact::ContactExtension e(0.3, 0.5);
  const PhaseProvider p = [&](double k, double mu) {
    return mu == e.alpha ? contact::phase_shift(e, k) : 0.0;
  };
  const auto c = channel_sum(0.3, 1.2, p, 6);
  for (std::size_t i = 0; i < c.m.size(); ++i)
    CHECK((c.c[i] != cplx(0.0)) == (c.m[i] == 0));
  const cplx c0 = c.c[6];
  CHECK(std::abs(c0 - std::exp(cplx(0.0, -0.3 * pi)) * contact::partial_amplitude(e, 1.2)) < 1e-14);
}

TEST_CASE("square well: truncation tail bounds the change from more channels") {
  const double k = 0.5;
  const auto c8 = channel_sum(0.5, k, kWell, 8);
  const auto c32 = channel_sum(0.5, k, kWell, 32);
  const auto c16 = channel_sum(0.5, k, kWell, 16);
  for (double th : {0.2, 1.0, 2.0, 3.0}) {
    const cplx a8 = scattering_amplitude(c8, th), a32 = scattering_amplitude(c32, th);
    CHECK(std::abs(a8 - a32) <= c8.tail + 1e-15);
    CHECK(std::abs(scattering_amplitude(c16, th) - a32) < 1e-12);
  }
  const auto adaptive = channel_sum(0.5, k, kWell, 0, 1e-10);
  CHECK(adaptive.tail <= 1e-10);
  CHECK(adaptive.m_max <= 64);
}

TEST_CASE("statistics invariants of the well cross-section") {
  const std::vector<double> th{0.3, 0.9, 1.4};
  std::vector<double> mirror;
  for (double t : th) mirror.push_back(pi - t);
  for (double a : {0.0, 1.0}) {
    const auto t1 = differential_cross_section(a, 0.5, th, kWell);
    const auto t2 = differential_cross_section(a, 0.5, mirror, kWell);
    for (std::size_t i = 0; i < th.size(); ++i)
      CHECK(std::abs(t1.dsigma[i] - t2.dsigma[i]) < 1e-12 * t1.dsigma[i]);
  }
  // Fermions: node at theta = pi/2.
  const auto f = differential_cross_section(1.0, 0.5, {pi / 2}, kWell);
  CHECK(f.dsigma[0] < 1e-28);
  // alpha and 1 - alpha are not equivalent once the well scatters.
  const auto x = differential_cross_section(0.3, 0.5, {1.0}, kWell);
  const auto y = differential_cross_section(0.7, 0.5, {1.0}, kWell);
  CHECK(std::abs(x.dsigma[0] - y.dsigma[0]) > 1e-6);
}

TEST_CASE("AB singularity dominates near forward and backward angles") {
  const double k = 0.5;
  for (double th : {1e-4, pi - 1e-4}) {
    const auto t = differential_cross_section(0.5, k, {th}, kWell);
    const double s2 = std::sin(th) * std::sin(th);
    CHECK(std::abs(t.dsigma[0] * s2 * pi * k - 1.0) < 1e-2);
  }
}

TEST_CASE("normalized contact cross-section") {
  const std::vector<double> th = default_theta_grid(64);
  // s = inf: pure AB divided by sin^2(pi alpha), independent of alpha.
  const auto a = normalized_contact_cross_section({0.2, HUGE_VAL}, 1.0, th);
  const auto b = normalized_contact_cross_section({0.7, HUGE_VAL}, 1.0, th);
  for (std::size_t i = 0; i < th.size(); ++i) {
    CHECK(std::abs(a.dsigma[i] - b.dsigma[i]) < 1e-13 * a.dsigma[i]);
    CHECK(std::abs(a.dsigma[i] - 1.0 / (pi * std::pow(std::sin(th[i]), 2))) < 1e-13 * a.dsigma[i]);
  }
  // Every s passes through 1/(pi k sin^2 pi alpha) at theta = pi alpha.
  for (double al : {0.3, 0.5})
    for (double s : {-10.0, -2.0, 0.0, 3.0, HUGE_VAL}) {
      const auto t = normalized_contact_cross_section({al, s}, 1.3, {pi * al});
      CHECK(std::abs(t.dsigma[0] * pi * 1.3 * std::pow(std::sin(pi * al), 2) - 1.0) < 1e-12);
    }
  // Zeros at alpha = 1/2, k = 1.
  CHECK(normalized_contact_cross_section({0.5, 0.0}, 1.0, {pi / 4}).dsigma[0] < 1e-20);
  CHECK(normalized_contact_cross_section({0.5, 2.0}, 1.0, {3 * pi / 4}).dsigma[0] < 1e-14);
  CHECK(std::abs(a.scale - 1.0 / std::pow(std::sin(0.2 * pi), 2)) < 1e-14);
  CHECK_THROWS_AS(normalized_contact_cross_section({0.0, 1.0}, 1.0, th), DomainError);
}

TEST_CASE("grids and failures") {
  const auto g = default_theta_grid();
  CHECK(g.size() == 512);
  CHECK(std::abs(g.front() - 0.01 * pi) < 1e-15);
  CHECK(std::abs(g.back() - 0.99 * pi) < 1e-15);
  CHECK_THROWS_AS(differential_cross_section(0.5, 1.0, {0.0}, kZero), DomainError);
  CHECK_THROWS_AS(differential_cross_section(0.5, 1.0, {pi}, kZero), DomainError);
  const PhaseProvider flat = [](double, double) { return 0.3; };
  CHECK_THROWS_AS(channel_sum(0.5, 1.0, flat), ConvergenceError);
  CHECK_THROWS_AS(channel_sum(0.5, -1.0, kZero), DomainError);
}
