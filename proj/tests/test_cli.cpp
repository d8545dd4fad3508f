#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "anyon/cli.hpp"
#include "anyon/errors.hpp"

using namespace anyon::cli;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int rc = run_cli(args, o, e);
  return {rc, o.str(), e.str()};
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

// Data rows (no comments, no header) as text.
std::vector<std::string> rows(const std::string& csv) {
  std::vector<std::string> r;
  std::istringstream in(csv);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    r.push_back(line);
  }
  return r;
}

std::vector<double> column(const std::string& csv, int c) {
  std::vector<double> v;
  for (const auto& row : rows(csv)) {
    std::istringstream s(row);
    std::string cell;
    for (int i = 0; i <= c; ++i) std::getline(s, cell, ',');
    v.push_back(cell.empty() ? NAN : std::stod(cell));
  }
  return v;
}

double num(const std::string& s) { return std::stod(s); }

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("grid and number parsing") {
  const auto g = parse_grid("1e-4:1e4:9:log");
  const auto v = g.values();
  REQUIRE(v.size() == 9);
  CHECK(v[0] == 1e-4);
  CHECK(v[8] == 1e4);
  CHECK(std::abs(v[4] - 1.0) < 1e-14);
  CHECK(parse_grid("0:1:3").values()[1] == 0.5);
  CHECK_THROWS_AS(parse_grid("0:1"), anyon::DomainError);
  CHECK_THROWS_AS(parse_grid("0:1:2.5"), anyon::DomainError);
  CHECK_THROWS_AS(parse_grid("0:1:4:log"), anyon::DomainError);
  CHECK(std::isinf(parse_extended_real("-inf")));
  CHECK(parse_list("1, 2,inf").size() == 3);
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-HUGE_VAL) == "-inf");
}

TEST_CASE("ab-xsec: determinism, alpha <-> 1 - alpha, bosons") {
  const auto a = run({"ab-xsec", "--alpha", "0.25", "--theta", "0.01:0.99:64"});
  REQUIRE(a.rc == 0);
  CHECK(a.out == run({"ab-xsec", "--alpha", "0.25", "--theta", "0.01:0.99:64"}).out);
  CHECK(a.out == run({"ab-xsec", "--alpha", "0.25", "--theta", "0.01:0.99:64", "--jobs", "4"}).out);
  const auto b = run({"ab-xsec", "--alpha", "0.75", "--theta", "0.01:0.99:64"});
  CHECK(rows(a.out) == rows(b.out));
  const auto z = run({"ab-xsec", "--alpha", "0", "--theta", "0.01:0.99:16"});
  for (double x : column(z.out, 1)) CHECK(x == 0.0);
  CHECK(a.out.rfind("# anyonscat 0.1.0\n# command: ab-xsec\n", 0) == 0);
}

TEST_CASE("delta-bound: threshold and |k_b| = 1 at alpha = 1/2, s = 0") {
  const auto r = run({"delta-bound", "--alpha", "0,0.5", "--s", "-1:2:13"});
  REQUIRE(r.rc == 0);
  const auto s = column(r.out, 0), al = column(r.out, 1), kb = column(r.out, 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (al[i] == 0.0) CHECK(std::isfinite(kb[i]));
    if (al[i] == 0.5) {
      CHECK(std::isnan(kb[i]) == (s[i] >= 1.0));
      if (s[i] == 0.0) CHECK(std::abs(kb[i] - 1.0) < 1e-14);
    }
  }
  const auto m = summary(r.out);
  CHECK(m.at("s_threshold_alpha=0.5") == "1");
  CHECK(m.at("s_threshold_alpha=0") == "none");
}

TEST_CASE("delta-phase summaries") {
  auto m = summary(run({"delta-phase", "--alpha", "0.5", "--s", "0"}).out);
  CHECK(std::abs(num(m.at("delta0")) - M_PI) < 1e-15);
  CHECK(std::abs(num(m.at("deltainf")) - M_PI / 2) < 1e-15);
  CHECK(m.at("n") == "1");
  CHECK(num(m.at("alpha_hat")) == 0.5);
  m = summary(run({"delta-phase", "--alpha", "0.3", "--s", "5"}).out);
  CHECK(m.at("n") == "0");
  CHECK(std::abs(num(m.at("alpha_hat")) - 0.3) < 1e-14);
  m = summary(run({"delta-phase", "--alpha", "0.25", "--s", "2"}).out);
  CHECK(m.at("degenerate") == "true");
  CHECK(m.at("alpha_hat") == "nan");
}

TEST_CASE("delta-xsec: crossover at pi alpha and zeros") {
  const auto r = run({"delta-xsec", "--alpha", "0.5", "--s", "0,2,inf", "--normalized"});
  REQUIRE(r.rc == 0);
  const auto m = summary(r.out);
  CHECK(std::abs(num(m.at("min_theta_s=0")) - M_PI / 4) < 1e-6);
  CHECK(num(m.at("min_value_s=0")) < 1e-12);
  CHECK(std::abs(num(m.at("min_theta_s=2")) - 3 * M_PI / 4) < 1e-6);
  CHECK(std::abs(num(m.at("crossover_theta_s=0")) - M_PI / 2) < 1e-9);
  const auto c = run({"delta-xsec", "--alpha", "0.5", "--s", "1", "--normalized"});
  CHECK(summary(c.out).at("crossover_theta_s=1") == "coincident");
}

TEST_CASE("well-xsec and well-regge") {
  const auto w = run({"well-xsec", "--alpha", "1", "--theta", "0.25:0.75:3"});
  REQUIRE(w.rc == 0);
  CHECK(column(w.out, 1)[1] < 1e-28);
  const auto r = run({"well-regge"});
  REQUIRE(r.rc == 0);
  const auto m = summary(r.out);
  CHECK(m.at("trajectories") == "2");
  CHECK(std::abs(num(m.at("trajectory_1_termination_mu")) - 2.893) < 0.005);
  CHECK(std::abs(num(m.at("trajectory_2_termination_mu")) - 0.674) < 0.005);
  CHECK(m.at("trajectory_1_monotone") == "true");
  CHECK(r.out == run({"well-regge", "--jobs", "3"}).out);
}

TEST_CASE("jost-eval: methods agree; tabulated file echoed") {
  const auto r = run({"jost-eval", "--k", "0.5:5:6"});
  REQUIRE(r.rc == 0);
  CHECK(num(summary(r.out).at("max_discrepancy")) < 1e-6);
  {
    std::ofstream f("cli_table.txt");
    f << "0.5 -2\n1.0 -1\n1.5 0\n";
  }
  const auto t = run({"jost-eval", "--potential", "file:cli_table.txt", "--method", "numeric",
                      "--k", "1:2:2"});
  REQUIRE(t.rc == 0);
  CHECK(t.out.find("cli_table.txt") != std::string::npos);
  CHECK(t.out.find("#   1 -1\n") != std::string::npos);
  CHECK(run({"jost-eval", "--potential", "file:cli_table.txt", "--method", "analytic"}).rc == 2);
  std::remove("cli_table.txt");
}

TEST_CASE("exit codes") {
  CHECK(run({"ab-xsec", "--alpha", "1.5"}).rc == 2);
  CHECK(run({"ab-xsec", "--theta", "0:1:5"}).rc == 2);
  CHECK(run({"nonsense"}).rc == 2);
  CHECK(run({}).rc == 2);
  CHECK(run({"ab-xsec", "--jobs", "0"}).rc == 2);
  CHECK(run({"delta-xsec", "--alpha", "0", "--normalized"}).rc == 2);
  const auto c = run({"well-xsec", "--E", "1e6"});
  CHECK(c.rc == 3);
  CHECK(c.err.find("no convergence") != std::string::npos);
  CHECK(run({"--version"}).out.find("0.1.0") != std::string::npos);
}

TEST_CASE("config file, JSON and plot script") {
  {
    std::ofstream f("cli_config.txt");
    f << "# defaults\nalpha = 0.3\ntheta = 0.1:0.9:5\n";
  }
  const auto a = run({"ab-xsec", "--config", "cli_config.txt"});
  REQUIRE(a.rc == 0);
  CHECK(a.out.find("# param alpha = 0.3\n") != std::string::npos);
  const auto b = run({"ab-xsec", "--config", "cli_config.txt", "--alpha", "0.6"});
  CHECK(b.out.find("# param alpha = 0.6\n") != std::string::npos);
  CHECK(rows(b.out).size() == 5);
  std::remove("cli_config.txt");

  const auto j = run({"delta-phase", "--format", "json", "--k", "1:2:2"});
  REQUIRE(j.rc == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["command"] == "delta-phase");
  CHECK(doc["rows"].size() == 2);
  CHECK(doc["summary"]["n"] == 1);
  CHECK(doc["summary"]["degenerate"] == false);

  CHECK(run({"ab-xsec", "--plot-script", "p.py"}).rc == 2);
  REQUIRE(run({"ab-xsec", "-o", "cli_out.csv", "--plot-script", "cli_plot.py"}).rc == 0);
  const std::string py = slurp("cli_plot.py");
  CHECK(py.find("matplotlib") != std::string::npos);
  CHECK(py.find("cli_out.csv") != std::string::npos);
  CHECK(slurp("cli_out.csv").rfind("# anyonscat", 0) == 0);
  std::remove("cli_out.csv");
  std::remove("cli_plot.py");
}
