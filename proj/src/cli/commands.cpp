#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>

#include <boost/math/special_functions/sin_pi.hpp>

#include "CLI11.hpp"

#include "anyon/cli.hpp"
#include "anyon/delta_model.hpp"
#include "anyon/errors.hpp"
#include "anyon/free_theory.hpp"
#include "anyon/jost.hpp"
#include "anyon/observables.hpp"
#include "anyon/potential.hpp"
#include "anyon/regge.hpp"
#include "anyon/roots.hpp"
#include "anyon/square_well.hpp"

namespace anyon::cli {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct Common {
  std::string output;
  std::string format = "csv";
  int jobs = 1;
  std::string plot;
  std::string config;
};

std::string num(double x) { return format_number(x); }

std::vector<double> theta_values(const GridSpec& g) {
  auto v = g.values();
  for (double& t : v) t *= pi;
  return v;
}

void require_alpha(double alpha, bool allow_one = true) {
  if (!(alpha >= 0.0) || alpha > 1.0 || (!allow_one && alpha == 1.0))
    throw DomainError(allow_one ? "alpha must lie in [0, 1]" : "alpha must lie in [0, 1)");
}

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(name) + " must be positive");
}

// Brent refinement of a sampled minimum on the bracket around index i.
std::pair<double, double> refine_minimum(const std::function<double(double)>& f,
                                         const std::vector<double>& x, const std::vector<double>& y) {
  const auto it = std::min_element(y.begin(), y.end());
  const std::size_t i = it - y.begin();
  if (i == 0 || i + 1 == x.size()) return {x[i], y[i]};
  auto r = num::minimize(f, x[i - 1], x[i + 1], 1e-13);
  if (r.second > y[i]) return {x[i], y[i]};
  return r;
}

// Root of g nearest to `target` among the sign changes of the sampled values.
double nearest_crossing(const std::function<double(double)>& g, const std::vector<double>& x,
                        const std::vector<double>& y, double target) {
  double best = nan;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    double root = nan;
    if (y[i] == 0.0)
      root = x[i];
    else if ((y[i] > 0.0) != (y[i + 1] > 0.0) && y[i + 1] != 0.0)
      root = num::brent(g, x[i], x[i + 1], y[i], y[i + 1], 1e-14);
    if (!std::isnan(root) && (std::isnan(best) || std::abs(root - target) < std::abs(best - target)))
      best = root;
  }
  return best;
}

// ---------------------------------------------------------------------------

struct AbXsec {
  double alpha = 0.5, k = 1.0;
  std::string theta = "0.01:0.99:512";

  void bind(CLI::App* s) {
    s->add_option("--alpha", alpha, "statistics parameter in [0, 1]");
    s->add_option("--k", k, "momentum");
    s->add_option("--theta", theta, "angle grid in units of pi");
  }

  Document run(const Common&) const {
    require_alpha(alpha);
    require_positive(k, "k");
    const GridSpec g = parse_grid(theta);
    Document d;
    d.command = "ab-xsec";
    d.parameters = {{"alpha", num(alpha)}, {"k", num(k)}, {"theta", g.str() + " (units of pi)"}};
    d.table.add_column("theta");
    d.table.add_column("dsigma");
    for (double t : theta_values(g)) {
      if (!(t > 0.0 && t < pi)) throw DomainError("theta grid must avoid the forward directions 0 and pi");
      d.table.rows.push_back({t, ab_cross_section(alpha, k, t)});
    }
    return d;
  }
};

struct DeltaBound {
  std::string alpha = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  std::string s = "-2:6:161";

  void bind(CLI::App* c) {
    c->add_option("--alpha", alpha, "comma-separated statistics parameters in [0, 1)");
    c->add_option("--s", s, "extension parameter grid");
  }

  Document run(const Common&) const {
    const auto alphas = parse_list(alpha);
    for (double a : alphas) require_alpha(a, false);
    const GridSpec g = parse_grid(s);
    Document d;
    d.command = "delta-bound";
    d.parameters = {{"alpha", alpha}, {"s", g.str()}};
    d.notes.push_back("abs_kb blank where no bound state exists");
    d.table.add_column("s");
    d.table.add_column("alpha");
    d.table.add_column("abs_kb");
    d.table.add_column("E_b");
    for (double a : alphas) {
      for (double sv : g.values()) {
        const auto b = contact::bound_state(contact::ContactExtension(a, sv));
        d.table.rows.push_back({sv, a, b.exists ? b.k_b.imag() : nan, b.exists ? b.E_b : nan});
      }
      if (a >= contact::kBosonicCrossover)
        d.summary.push_back({"s_threshold_alpha=" + num(a), num(0.5 / a)});
      else
        d.summary.push_back({"s_threshold_alpha=" + num(a), "none"});
    }
    return d;
  }
};

struct DeltaXsec {
  double alpha = 0.5, k = 1.0;
  std::string s = "-10,-8,-6,-4,-2,0,inf";
  std::string theta = "0.01:0.99:512";
  bool normalized = false;

  void bind(CLI::App* c) {
    c->add_option("--alpha", alpha, "statistics parameter in [0, 1)");
    c->add_option("--k", k, "momentum");
    c->add_option("--s", s, "comma-separated extension parameters (inf, -inf allowed)");
    c->add_option("--theta", theta, "angle grid in units of pi");
    c->add_flag("--normalized", normalized, "divide by sin^2(pi alpha)");
  }

  double value(double sv, double t) const {
    const contact::ContactExtension ext(alpha, sv);
    if (normalized) return normalized_contact_cross_section(ext, k, {t}).dsigma[0];
    const PhaseProvider phase = [&](double kk, double mu) {
      return mu == alpha ? contact::phase_shift(ext, kk) : 0.0;
    };
    return differential_cross_section(alpha, k, {t}, phase, 1).dsigma[0];
  }

  Document run(const Common& common) const {
    require_alpha(alpha, false);
    require_positive(k, "k");
    if (normalized && alpha == 0.0) throw DomainError("normalized cross-section needs 0 < alpha < 1");
    const auto svals = parse_list(s);
    const GridSpec g = parse_grid(theta);
    const auto th = theta_values(g);
    for (double t : th)
      if (!(t > 0.0 && t < pi)) throw DomainError("theta grid must avoid the forward directions 0 and pi");

    std::vector<std::vector<double>> cols(svals.size());
    parallel_for(svals.size(), common.jobs, [&](std::size_t j) {
      const contact::ContactExtension ext(alpha, svals[j]);
      if (normalized) {
        cols[j] = normalized_contact_cross_section(ext, k, th).dsigma;
      } else {
        const PhaseProvider phase = [&](double kk, double mu) {
          return mu == alpha ? contact::phase_shift(ext, kk) : 0.0;
        };
        cols[j] = differential_cross_section(alpha, k, th, phase, 1).dsigma;
      }
    });

    Document d;
    d.command = "delta-xsec";
    d.parameters = {{"alpha", num(alpha)},
                    {"k", num(k)},
                    {"s", s},
                    {"theta", g.str() + " (units of pi)"},
                    {"normalized", normalized ? "true" : "false"}};
    d.notes.push_back("contact interaction acts in the m = 0 channel only");
    d.table.add_column("theta");
    for (double sv : svals) d.table.add_column("dsigma_s=" + num(sv));
    for (std::size_t i = 0; i < th.size(); ++i) {
      std::vector<double> row{th[i]};
      for (const auto& c : cols) row.push_back(c[i]);
      d.table.rows.push_back(std::move(row));
    }

    const double inf = std::numeric_limits<double>::infinity();
    const std::vector<double> free_col =
        normalized ? normalized_contact_cross_section(contact::ContactExtension(alpha, inf), k, th).dsigma
                   : value_column(inf, th);
    for (std::size_t j = 0; j < svals.size(); ++j) {
      const double sv = svals[j];
      const auto m = refine_minimum([&](double t) { return value(sv, t); }, th, cols[j]);
      d.summary.push_back({"min_theta_s=" + num(sv), num(m.first)});
      d.summary.push_back({"min_value_s=" + num(sv), num(m.second)});
      if (std::isinf(sv)) continue;
      std::vector<double> diff(th.size());
      double gap = 0.0;
      for (std::size_t i = 0; i < th.size(); ++i) {
        diff[i] = cols[j][i] - free_col[i];
        gap = std::max(gap, std::abs(diff[i]) / free_col[i]);
      }
      // 2 alpha s = 1: delta = pi alpha and the curve equals the s = inf one.
      if (gap < 1e-12) {
        d.summary.push_back({"crossover_theta_s=" + num(sv), "coincident"});
        continue;
      }
      const auto g2 = [&](double t) { return value(sv, t) - value(inf, t); };
      const double cross = nearest_crossing(g2, th, diff, pi * alpha);
      d.summary.push_back({"crossover_theta_s=" + num(sv), std::isnan(cross) ? "none" : num(cross)});
    }
    return d;
  }

  std::vector<double> value_column(double sv, const std::vector<double>& th) const {
    std::vector<double> v;
    for (double t : th) v.push_back(value(sv, t));
    return v;
  }
};

struct DeltaPhase {
  double alpha = 0.5;
  std::string s = "0";
  std::string kgrid = "1e-4:1e4:161:log";

  void bind(CLI::App* c) {
    c->add_option("--alpha", alpha, "statistics parameter in [0, 1)");
    c->add_option("--s", s, "extension parameter (inf, -inf allowed)");
    c->add_option("--k", kgrid, "momentum grid");
  }

  Document run(const Common& common) const {
    require_alpha(alpha, false);
    const contact::ContactExtension ext(alpha, parse_extended_real(s));
    const GridSpec g = parse_grid(kgrid);
    const auto ks = g.values();
    if (!(ks.front() > 0.0)) throw DomainError("momentum grid must be positive");
    std::vector<double> delta(ks.size());
    parallel_for(ks.size(), common.jobs, [&](std::size_t i) { delta[i] = contact::phase_shift(ext, ks[i]); });

    Document d;
    d.command = "delta-phase";
    d.parameters = {{"alpha", num(alpha)}, {"s", num(ext.s)}, {"k", g.str()}};
    d.notes.push_back("delta branch in (0, pi); limits from the closed-form phase function");
    d.table.add_column("k");
    d.table.add_column("delta");
    for (std::size_t i = 0; i < ks.size(); ++i) d.table.rows.push_back({ks[i], delta[i]});
    const auto L = contact::levinson_relation(ext);
    d.summary = {{"delta0", num(L.delta_zero)},
                 {"deltainf", num(L.delta_infinity)},
                 {"n", std::to_string(L.n)},
                 {"alpha_hat", num(L.alpha_hat)},
                 {"lhs", num(L.lhs)},
                 {"degenerate", L.degenerate ? "true" : "false"}};
    return d;
  }
};

struct WellXsec {
  double alpha = 0.5, E = 0.25, V0 = 25.0, d = 1.0;
  std::string theta = "0.01:0.99:512";
  int m_max = 0;
  double tol = 1e-8;

  void bind(CLI::App* c) {
    c->add_option("--alpha", alpha, "statistics parameter in [0, 1]");
    c->add_option("--E", E, "energy E = k^2");
    c->add_option("--V0", V0, "well depth");
    c->add_option("--d", d, "well radius");
    c->add_option("--theta", theta, "angle grid in units of pi");
    c->add_option("--m-max", m_max, "channel truncation (0: adaptive)");
    c->add_option("--tol", tol, "tolerance on the dropped channels");
  }

  Document run(const Common&) const {
    require_alpha(alpha);
    require_positive(E, "E");
    if (m_max < 0) throw DomainError("m-max must be >= 0");
    require_positive(tol, "tol");
    const well::WellParams w(V0, d);
    const double k = std::sqrt(E);
    const GridSpec g = parse_grid(theta);
    const auto th = theta_values(g);
    for (double t : th)
      if (!(t > 0.0 && t < pi)) throw DomainError("theta grid must avoid the forward directions 0 and pi");
    const PhaseProvider phase = [&](double kk, double mu) { return well::phase_shift_raw(w, kk, mu); };
    const auto tab = differential_cross_section(alpha, k, th, phase, m_max, tol);
    const ChannelSum ch = channel_sum(alpha, k, phase, tab.m_max, 1.0);

    Document doc;
    doc.command = "well-xsec";
    doc.parameters = {{"alpha", num(alpha)}, {"E", num(E)},   {"V0", num(V0)},
                      {"d", num(d)},         {"theta", g.str() + " (units of pi)"},
                      {"m_max", m_max > 0 ? std::to_string(m_max) : "adaptive"},
                      {"tol", num(tol)}};
    doc.notes.push_back("truncation m_max = " + std::to_string(tab.m_max) +
                        ", tail estimate = " + num(tab.tail_estimate));
    doc.table.add_column("theta");
    doc.table.add_column("dsigma");
    doc.table.add_column("abs_f_alpha");
    doc.table.add_column("abs_f_ab");
    for (std::size_t i = 0; i < th.size(); ++i)
      doc.table.rows.push_back({th[i], tab.dsigma[i], std::abs(tab.f_alpha[i]), std::abs(tab.f_ab[i])});
    const auto ds = [&](double t) {
      return std::norm(scattering_amplitude(ch, t) + ab_amplitude(alpha, k, t).regular_part);
    };
    const auto m = refine_minimum(ds, th, tab.dsigma);
    doc.summary = {{"m_max", std::to_string(tab.m_max)},
                   {"tail_estimate", num(tab.tail_estimate)},
                   {"min_theta", num(m.first)},
                   {"min_value", num(m.second)}};
    return doc;
  }
};

struct WellRegge {
  double V0 = 25.0, d = 1.0;
  std::string mu = "0.01:4:400";
  std::string method = "analytic";

  void bind(CLI::App* c) {
    c->add_option("--V0", V0, "well depth");
    c->add_option("--d", d, "well radius");
    c->add_option("--mu", mu, "channel-order grid");
    c->add_option("--method", method, "analytic | numeric")->check(CLI::IsMember({"analytic", "numeric"}));
  }

  Document run(const Common&) const {
    const well::WellParams w(V0, d);
    const GridSpec g = parse_grid(mu);
    const auto grid = g.values();
    if (!(grid.front() > 0.0)) throw DomainError("mu grid must be positive");
    const auto traj = method == "analytic"
                          ? well::regge_roots(w, grid)
                          : regge_trace(RadialPotential::square_well(V0, d), grid);
    Document doc;
    doc.command = "well-regge";
    doc.parameters = {{"V0", num(V0)}, {"d", num(d)}, {"mu", g.str()}, {"method", method}};
    doc.notes.push_back("kappa: bound state at k = i kappa; termination mu interpolated where kappa -> 0");
    doc.table.add_column("id", true);
    doc.table.add_column("mu");
    doc.table.add_column("kappa");
    for (const auto& t : traj)
      for (const auto& p : t.points) doc.table.rows.push_back({double(t.id), p.mu, p.kappa});
    doc.summary.push_back({"trajectories", std::to_string(traj.size())});
    for (const auto& t : traj) {
      const std::string id = "trajectory_" + std::to_string(t.id);
      doc.summary.push_back({id + "_terminated", t.terminated ? "true" : "false"});
      doc.summary.push_back({id + "_termination_mu", t.terminated ? num(t.termination_mu) : "none"});
      doc.summary.push_back({id + "_monotone", t.monotone ? "true" : "false"});
      doc.summary.push_back({id + "_truncated", t.truncated ? "true" : "false"});
      if (!t.note.empty()) doc.summary.push_back({id + "_note", t.note});
    }
    return doc;
  }
};

struct JostEval {
  std::string potential = "square-well:V0=25,d=1";
  double mu = 0.5;
  std::string kgrid = "0.1:10:50";
  std::string method = "both";

  void bind(CLI::App* c) {
    c->add_option("--potential", potential, "free | square-well:V0=,d= | exponential:V0=,a= | file:path");
    c->add_option("--mu", mu, "channel order > 0");
    c->add_option("--k", kgrid, "momentum grid");
    c->add_option("--method", method, "analytic | numeric | both")
        ->check(CLI::IsMember({"analytic", "numeric", "both"}));
  }

  Document run(const Common& common) const {
    const RadialPotential V = RadialPotential::parse(potential);
    if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("mu must be > 0");
    const GridSpec g = parse_grid(kgrid);
    const auto ks = g.values();
    if (!(ks.front() > 0.0)) throw DomainError("momentum grid must be positive");
    const bool an = method != "numeric", nu = method != "analytic";
    const bool closed = V.kind() == RadialPotential::Kind::square_well || V.kind() == RadialPotential::Kind::free;
    if (an && !closed) throw DomainError("analytic method needs a square-well or free potential");

    const std::size_t n = ks.size();
    std::vector<cplx> Fa(n, 1.0), Fn(n);
    std::vector<double> da(n, 0.0), dn(n), res(n);
    if (an && V.kind() == RadialPotential::Kind::square_well) {
      const well::WellParams w(V.depth(), V.radius());
      parallel_for(n, common.jobs, [&](std::size_t i) { Fa[i] = well::jost_function_analytic(w, ks[i], mu); });
      da = well::phase_shift_curve(w, mu, ks).delta;
    }
    if (nu) {
      parallel_for(n, common.jobs, [&](std::size_t i) {
        const auto e = jost_function(V, ks[i], mu);
        Fn[i] = e.F;
        res[i] = e.wronskian_residual;
      });
      const JostProvider cached = [&](cplx k) {
        const auto it = std::lower_bound(ks.begin(), ks.end(), k.real());
        return Fn[it - ks.begin()];
      };
      dn = phase_shift_curve(cached, mu, ks).delta;
      if (an) {
        // Both curves are continuous in k; put them on the same branch.
        const double shift = pi * std::round((da.back() - dn.back()) / pi);
        for (double& x : dn) x += shift;
      }
    }

    Document d;
    d.command = "jost-eval";
    d.parameters = {{"potential", V.describe()}, {"mu", num(mu)}, {"k", g.str()}, {"method", method}};
    if (V.kind() == RadialPotential::Kind::tabulated) {
      d.notes.push_back("tabulated potential from " + V.source() + ", " +
                        std::to_string(V.sample_r().size()) + " samples (r, V):");
      for (std::size_t i = 0; i < V.sample_r().size(); ++i)
        d.notes.push_back("  " + num(V.sample_r()[i]) + " " + num(V.sample_v()[i]));
    }
    d.notes.push_back(an ? "delta_analytic continued from delta(inf) = 0"
                         : "delta_numeric anchored at the largest grid momentum");
    d.table.add_column("k");
    if (an) {
      d.table.add_column("re_F_analytic");
      d.table.add_column("im_F_analytic");
      d.table.add_column("delta_analytic");
    }
    if (nu) {
      d.table.add_column("re_F_numeric");
      d.table.add_column("im_F_numeric");
      d.table.add_column("delta_numeric");
      d.table.add_column("wronskian_residual");
    }
    if (an && nu) d.table.add_column("discrepancy");
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> row{ks[i]};
      if (an) row.insert(row.end(), {Fa[i].real(), Fa[i].imag(), da[i]});
      if (nu) row.insert(row.end(), {Fn[i].real(), Fn[i].imag(), dn[i], res[i]});
      if (an && nu) {
        const double disc = std::abs(Fn[i] - Fa[i]) / (1.0 + std::abs(Fa[i]));
        worst = std::max(worst, disc);
        row.push_back(disc);
      }
      d.table.rows.push_back(std::move(row));
    }
    if (an && nu) d.summary.push_back({"max_discrepancy", num(worst)});
    if (nu) d.summary.push_back({"max_wronskian_residual", num(*std::max_element(res.begin(), res.end()))});
    return d;
  }
};

// Inserts "--key=value" tokens from --config right after the subcommand name,
// so that later command-line flags take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args,
                                       const std::vector<std::string>& commands) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  const auto tokens = read_config(path);
  std::vector<std::string> out = args;
  auto pos = std::find_first_of(out.begin(), out.end(), commands.begin(), commands.end());
  if (pos == out.end()) throw DomainError("config file given without a subcommand");
  out.insert(pos + 1, tokens.begin(), tokens.end());
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-anyon scattering: Aharonov-Bohm, contact and square-well models", kProgram};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  Common common;
  app.add_option("-o,--output", common.output, "output file (default: stdout)");
  app.add_option("--format", common.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", common.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--plot-script", common.plot, "write a matplotlib script for the CSV output");
  app.add_option("--config", common.config, "flat key = value file; flags override it");

  AbXsec ab;
  DeltaBound db;
  DeltaXsec dx;
  DeltaPhase dp;
  WellXsec wx;
  WellRegge wr;
  JostEval je;
  std::vector<std::pair<CLI::App*, std::function<Document()>>> subs;
  auto add = [&](const char* name, const char* help, auto& cmd) {
    CLI::App* s = app.add_subcommand(name, help)->fallthrough();
    cmd.bind(s);
    subs.push_back({s, [&cmd, &common] { return cmd.run(common); }});
  };
  add("ab-xsec", "Aharonov-Bohm differential cross-section", ab);
  add("delta-bound", "contact-interaction bound-state momenta |k_b|(s, alpha)", db);
  add("delta-xsec", "contact-interaction cross-sections for several s", dx);
  add("delta-phase", "contact-interaction phase shift and modified Levinson relation", dp);
  add("well-xsec", "square-well differential cross-section", wx);
  add("well-regge", "square-well Regge trajectories", wr);
  add("jost-eval", "Jost function and phase shift, closed form and/or ODE", je);

  std::vector<std::string> names;
  for (const auto& [s, f] : subs) names.push_back(s->get_name());

  try {
    std::vector<std::string> argv = expand_config(args, names);
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInvalid;
  } catch (const DomainError& e) {
    err << kProgram << ": " << e.what() << "\n";
    return kInvalid;
  }

  const Format fmt = common.format == "json" ? Format::json : Format::csv;
  if (!common.plot.empty() && (fmt != Format::csv || common.output.empty())) {
    err << kProgram << ": --plot-script needs CSV output written with --output\n";
    return kInvalid;
  }

  std::string text;
  Document doc;
  try {
    for (const auto& [s, run] : subs)
      if (s->parsed()) doc = run();
    text = render(doc, fmt);
  } catch (const DomainError& e) {
    err << kProgram << ": invalid parameters: " << e.what() << "\n";
    return kInvalid;
  } catch (const ConvergenceError& e) {
    err << kProgram << ": no convergence: " << e.what() << " (achieved " << e.achieved() << ")\n";
    return kNoConvergence;
  } catch (const OverflowError& e) {
    err << kProgram << ": no convergence: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const std::invalid_argument& e) {
    err << kProgram << ": invalid parameters: " << e.what() << "\n";
    return kInvalid;
  }

  if (common.output.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream f(common.output, std::ios::binary);
  if (!f || !(f << text)) {
    err << kProgram << ": cannot write " << common.output << "\n";
    return kInvalid;
  }
  if (!common.plot.empty()) {
    std::ofstream p(common.plot, std::ios::binary);
    if (!p || !(p << plot_script(doc, common.output))) {
      err << kProgram << ": cannot write " << common.plot << "\n";
      return kInvalid;
    }
  }
  return kOk;
}

}  // namespace anyon::cli
