// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "anyon/cli.hpp"
#include "anyon/delta_model.hpp"
#include "anyon/free_theory.hpp"
#include "anyon/jost.hpp"
#include "anyon/observables.hpp"
#include "anyon/square_well.hpp"
#include "oracles.hpp"

using namespace anyon;
using oracle::pi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

std::string cli(const std::vector<std::string>& args, int* rc = nullptr) {
  std::ostringstream o, e;
  const int r = cli::run_cli(args, o, e);
  if (rc) *rc = r;
  return o.str();
}

std::map<std::string, std::string> summary(const std::string& csv) {
  std::map<std::string, std::string> m;
  std::istringstream in(csv);
  std::string line;
  const std::string tag = "# summary ";
  while (std::getline(in, line)) {
    if (line.rfind(tag, 0) != 0) continue;
    const auto eq = line.find(" = ");
    m[line.substr(tag.size(), eq - tag.size())] = line.substr(eq + 3);
  }
  return m;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

const well::WellParams kW(25.0, 1.0);
const RadialPotential kWell = RadialPotential::square_well(25.0, 1.0);
const std::vector<double> kMus{0.3, 0.5, 1.5, 2.5};

void regge_terminations() {
  const auto t0 = Clock::now();
  int rc = 0;
  const auto m = summary(cli({"well-regge", "--V0", "25", "--d", "1"}, &rc));
  const double dt = seconds_since(t0);
  double t1 = NAN, t2 = NAN;
  try {
    t1 = std::stod(m.at("trajectory_1_termination_mu"));
    t2 = std::stod(m.at("trajectory_2_termination_mu"));
  } catch (...) {
  }
  const bool ok = rc == 0 && std::abs(t2 - 0.674) <= 0.005 && std::abs(t1 - 2.893) <= 0.005 && dt < 10.0;
  report(1, ok, fmt("terminations mu = %.6f, %.6f (targets 0.674, 2.893 +- 0.005); %.2f s", t2, t1, dt));
}

void jost_cross_validation() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (double mu : kMus)
    for (double k : linspace(0.1, 10.0, 50)) {
      const cplx fn = jost_function(kWell, k, mu).F;
      const cplx fa = well::jost_function_analytic(kW, k, mu);
      worst = std::max(worst, std::abs(fn - fa) / (1.0 + std::abs(fa)));
    }
  const double dt = seconds_since(t0);
  report(2, worst <= 1e-6 && dt < 30.0, fmt("max |Fn - Fa|/(1+|Fa|) = %.3e (<= 1e-6); %.2f s", worst, dt));
}

void unitarity() {
  double well_s = 0.0, contact_s = 0.0, wr = 0.0;
  for (double mu : kMus)
    for (double k : linspace(0.1, 10.0, 50)) {
      const cplx Fa = well::jost_function_analytic(kW, k, mu);
      well_s = std::max(well_s, std::abs(std::abs(std::conj(Fa) / Fa) - 1.0));
      const auto e = jost_function(kWell, k, mu);
      well_s = std::max(well_s, std::abs(std::abs(std::conj(e.F) / e.F) - 1.0));
      wr = std::max(wr, e.wronskian_residual);
      const double d = well::phase_shift(kW, k, mu);
      well_s = std::max(well_s, std::abs(std::abs(std::exp(cplx(0.0, 2.0 * d))) - 1.0));
      // Contact model: the interacting channel has order alpha = mu mod 1.
      const double alpha = mu - std::floor(mu);
      for (double s : {-2.0, 0.0, 2.0}) {
        const contact::ContactExtension x(alpha, s);
        const cplx S = 1.0 + contact::partial_amplitude(x, k) / amplitude_prefactor(k);
        contact_s = std::max(contact_s, std::abs(std::abs(S) - 1.0));
      }
    }
  const bool ok = well_s <= 1e-10 && contact_s <= 1e-10 && wr <= 1e-8;
  report(3, ok,
         fmt("max ||S|-1|: well %.2e, contact %.2e (<= 1e-10); Wronskian residual %.2e (<= 1e-8)", well_s,
             contact_s, wr));
}

void levinson() {
  const auto L = levinson_check(kWell, 0.5);
  const bool ok = L.n_bound == 2 && std::abs(L.lhs - 2.0 * pi) <= 1e-3;
  report(4, ok, fmt("delta(0+) - delta(inf) = %.6f (2 pi = %.6f), n = %.0f", L.lhs, 2.0 * pi, L.n_bound));
}

void delta_anchors() {
  const auto b = contact::bound_state({0.5, 0.0});
  double worst = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double a = 0.1 * i;
    for (double s : {-2.0, 0.0, 0.5 / a - 1e-6, 2.0}) {
      const auto L = contact::levinson_relation({a, s});
      worst = std::max(worst, std::isnan(L.alpha_hat) ? HUGE_VAL : std::abs(L.alpha_hat - a));
    }
  }
  const double eb = std::abs(b.E_b + 1.0);
  report(5, b.exists && eb <= 1e-12 && worst <= 1e-8,
         fmt("|E_b + 1| = %.2e (<= 1e-12); max |alpha_hat - alpha| = %.2e (<= 1e-8)", eb, worst));
}

void ab_limits() {
  bool zero = true;
  for (double k : {0.1, 1.0, 7.0})
    for (double th : linspace(0.01 * pi, 0.99 * pi, 99))
      zero = zero && ab_cross_section(0.0, k, th) == 0.0 && ab_cross_section(1.0, k, th) == 0.0;
  const double v = ab_cross_section(0.5, 1.0, pi / 2);
  report(6, zero && std::abs(v - 1.0 / pi) <= 1e-12,
         std::string("alpha in {0, 1} identically zero: ") + (zero ? "yes" : "no") +
             fmt("; dsigma(0.5, 1, pi/2) - 1/pi = %.2e (<= 1e-12)", v - 1.0 / pi));
}

void crossover() {
  const std::vector<double> th = default_theta_grid();
  const double step = th[1] - th[0];
  double worst = 0.0;
  int missing = 0, coincident = 0;
  for (double a : {0.25, 0.5, 0.75}) {
    const auto ref = normalized_contact_cross_section({a, HUGE_VAL}, 1.0, th);
    for (int s = -10; s <= 10; ++s) {
      const auto t = normalized_contact_cross_section({a, double(s)}, 1.0, th);
      // 2 alpha s = 1 gives delta = pi alpha at every k and the same curve as s = inf.
      double gap = 0.0;
      for (std::size_t i = 0; i < th.size(); ++i)
        gap = std::max(gap, std::abs(t.dsigma[i] - ref.dsigma[i]) / ref.dsigma[i]);
      if (gap < 1e-12) {
        ++coincident;
        continue;
      }
      double best = HUGE_VAL;
      for (std::size_t i = 0; i + 1 < th.size(); ++i) {
        const double d0 = t.dsigma[i] - ref.dsigma[i], d1 = t.dsigma[i + 1] - ref.dsigma[i + 1];
        if ((d0 > 0) == (d1 > 0) && d0 != 0.0) continue;
        const double x = th[i] + step * d0 / (d0 - d1);
        best = std::min(best, std::abs(x - pi * a));
      }
      if (!std::isfinite(best)) ++missing;
      worst = std::max(worst, best);
    }
  }
  report(7, missing == 0 && worst <= step,
         fmt("max |theta_cross - pi alpha| = %.2e (grid step %.2e), curves without a crossing: %.0f, "
             "coinciding with s = inf: %.0f",
             worst, step, missing, coincident));
}

void small_k_scaling() {
  std::string detail;
  bool ok = true;
  for (double mu : {0.7, 1.3}) {
    std::vector<double> x, y, z;
    for (double k : log_grid(1e-3, 1e-2, 20)) {
      x.push_back(std::log(k));
      y.push_back(std::log(std::abs(well::partial_amplitude(kW, k, mu))));
      z.push_back(std::log(std::abs(std::exp(cplx(0.0, 2.0 * well::phase_shift(kW, k, mu))) - 1.0) / k));
    }
    auto slope = [&](const std::vector<double>& v) {
      const double n = double(x.size());
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += v[i];
        sxx += x[i] * x[i];
        sxy += x[i] * v[i];
      }
      return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    const double sf = slope(y), target = 2.0 * mu - 1.0;
    ok = ok && std::abs(sf - target) <= 0.05 * std::abs(target);
    detail += fmt("mu=%.1f: slope |f| = %.4f (target 2mu-1 = %.4f; 2mu-1/2 = %.4f)", mu, sf, target,
                  2.0 * mu - 0.5);
    detail += fmt(", |S-1|/k %.4f; ", slope(z));
  }
  report(8, ok, detail);
}

void propagator() {
  double worst = 0.0;
  int n = 0;
  for (double r : linspace(0.3, 3.0, 5))
    for (double th : linspace(0.2, 2.9, 5))
      for (double t : {-1.3, 0.4, 0.9, 2.5}) {
        const PropagatorPoint p{r, 1.1, th, 0.1, t};
        worst = std::max(worst, std::abs(propagator_kernel(0.0, p).total() -
                                         oracle::bosonic_propagator(r, th, 1.1, 0.1, t)));
        ++n;
      }
  bool finite = true, holder = true;
  double min_margin = HUGE_VAL;
  for (int i = 1; i <= 9; ++i) {
    const double a = 0.1 * i;
    for (double chi : {0.4, 1.3, 2.6}) {
      for (double rho : linspace(0.0, 50.0, 21)) finite = finite && std::isfinite(std::abs(oscillatory_integral_I(a, rho, chi)));
      const cplx i0 = oscillatory_integral_I(a, 0.0, chi);
      const double d1 = std::abs(oscillatory_integral_I(a, 1e-4, chi) - i0);
      const double d2 = std::abs(oscillatory_integral_I(a, 1e-5, chi) - i0);
      const double slope = std::log10(d1 / d2);
      const double eps = 0.9 * std::min(a, 1.0 - a);
      holder = holder && slope >= eps;
      min_margin = std::min(min_margin, slope - eps);
    }
  }
  report(9, worst <= 1e-8 && n == 100 && finite && holder,
         fmt("alpha=0 kernel max error %.2e on %.0f points; I finite: %.0f; min(slope - 0.9 min(a,1-a)) = %.3f",
             worst, n, finite ? 1.0 : 0.0, min_margin));
}

void determinism() {
  const std::vector<std::vector<std::string>> cmds{
      {"ab-xsec"},
      {"delta-bound"},
      {"delta-xsec", "--normalized"},
      {"delta-phase"},
      {"well-xsec"},
      {"well-regge"},
      {"jost-eval", "--k", "0.1:10:20"},
  };
  int same = 0;
  for (const auto& c : cmds) {
    std::string first;
    bool ok = true;
    for (const char* jobs : {"1", "1", "4"}) {
      std::vector<std::string> args = c;
      for (const char* x : {"--jobs", jobs, "-o", "acceptance_out.csv"}) args.push_back(x);
      int rc = 0;
      cli(args, &rc);
      const std::string text = slurp("acceptance_out.csv");
      if (rc != 0 || text.empty()) ok = false;
      if (first.empty()) first = text;
      else ok = ok && text == first;
    }
    same += ok;
  }
  std::remove("acceptance_out.csv");
  report(10, same == int(cmds.size()), fmt("%.0f of %.0f commands byte-identical over three runs", same,
                                           double(cmds.size())));
}

}  // namespace

int main() {
  regge_terminations();
  jost_cross_validation();
  unitarity();
  levinson();
  delta_anchors();
  ab_limits();
  crossover();
  small_k_scaling();
  propagator();
  determinism();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
