#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "anyon/cli.hpp"
#include "anyon/errors.hpp"

namespace anyon::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_real(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw DomainError("expected a number, got an empty string");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
    throw DomainError("not a finite number: '" + t + "'");
  return v;
}

}  // namespace

std::vector<double> GridSpec::values() const {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    v[i] = log ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
               : start + t * (stop - start);
  }
  v.front() = start;
  v.back() = stop;
  return v;
}

std::string GridSpec::str() const {
  return format_number(start) + ":" + format_number(stop) + ":" + std::to_string(count) +
         (log ? ":log" : ":lin");
}

GridSpec parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() < 3 || parts.size() > 4)
    throw DomainError("grid must read start:stop:count[:lin|log], got '" + text + "'");
  GridSpec g;
  g.start = parse_real(parts[0]);
  g.stop = parse_real(parts[1]);
  const double c = parse_real(parts[2]);
  if (c != std::floor(c) || c < 2 || c > 1e7) throw DomainError("grid count must be an integer >= 2");
  g.count = static_cast<int>(c);
  if (parts.size() == 4) {
    if (parts[3] == "log")
      g.log = true;
    else if (parts[3] != "lin")
      throw DomainError("grid spacing must be 'lin' or 'log', got '" + parts[3] + "'");
  }
  if (!(g.stop > g.start)) throw DomainError("grid needs stop > start");
  if (g.log && !(g.start > 0.0)) throw DomainError("log grid needs positive bounds");
  return g;
}

double parse_extended_real(const std::string& text) {
  const std::string t = trim(text);
  if (t == "inf" || t == "+inf") return std::numeric_limits<double>::infinity();
  if (t == "-inf") return -std::numeric_limits<double>::infinity();
  return parse_real(t);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);  // shortest round-trip
  return std::string(buf, r.ptr);
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_extended_real(p));
  if (out.empty()) throw DomainError("empty list");
  return out;
}

std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DomainError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    while (!key.empty() && key.front() == '-') key.erase(key.begin());
    if (key.empty() || key == "config")
      throw DomainError(path + ":" + std::to_string(lineno) + ": invalid key");
    tokens.push_back("--" + key + "=" + value);
  }
  return tokens;
}

}  // namespace anyon::cli
