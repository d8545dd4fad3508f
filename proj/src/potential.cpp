#include "anyon/potential.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "anyon/errors.hpp"
#include "anyon/quadrature.hpp"

namespace anyon {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_number(const std::string& s, const std::string& what) {
  double x = 0.0;
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, x);
  if (ec != std::errc() || p != e || !std::isfinite(x))
    throw DomainError("potential: cannot parse " + what + " from '" + s + "'");
  return x;
}

std::map<std::string, double> parse_params(const std::string& body) {
  std::map<std::string, double> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("potential: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    out[key] = parse_number(item.substr(eq + 1), key);
  }
  return out;
}

double need(const std::map<std::string, double>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError("potential: missing parameter " + key);
  return it->second;
}

}  // namespace

RadialPotential RadialPotential::free() { return {}; }

RadialPotential RadialPotential::square_well(double V0, double d) {
  if (!std::isfinite(V0)) throw DomainError("square well: V0 must be finite");
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("square well: d must be positive");
  RadialPotential p;
  p.kind_ = Kind::square_well;
  p.V0_ = V0;
  p.d_ = d;
  return p;
}

RadialPotential RadialPotential::exponential(double V0, double a) {
  if (!std::isfinite(V0)) throw DomainError("exponential: V0 must be finite");
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("exponential: range a must be positive");
  RadialPotential p;
  p.kind_ = Kind::exponential;
  p.V0_ = V0;
  p.d_ = a;
  return p;
}

RadialPotential RadialPotential::tabulated(std::vector<double> r, std::vector<double> v,
                                           std::string source) {
  if (r.size() != v.size()) throw DomainError("tabulated potential: column length mismatch");
  if (r.size() < 2) throw DomainError("tabulated potential: need at least two samples");
  if (!(r.front() > 0.0)) throw DomainError("tabulated potential: grid must start at r > 0");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!std::isfinite(r[i]) || !std::isfinite(v[i]))
      throw DomainError("tabulated potential: non-finite sample");
    if (i > 0 && !(r[i] > r[i - 1]))
      throw DomainError("tabulated potential: grid must be strictly increasing");
  }
  RadialPotential p;
  p.kind_ = Kind::tabulated;
  p.r_ = std::move(r);
  p.v_ = std::move(v);
  p.source_ = std::move(source);
  return p;
}

RadialPotential RadialPotential::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("tabulated potential: cannot open " + path);
  std::vector<double> r, v;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    double a, b;
    if (!(ls >> a >> b))
      throw DomainError("tabulated potential: bad line " + std::to_string(lineno) + " in " + path);
    r.push_back(a);
    v.push_back(b);
  }
  return tabulated(std::move(r), std::move(v), path);
}

RadialPotential RadialPotential::parse(const std::string& spec) {
  if (spec == "free") return free();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw DomainError("potential: unknown spec '" + spec + "'");
  const std::string kind = spec.substr(0, colon), body = spec.substr(colon + 1);
  if (kind == "file") return load(body);
  const auto p = parse_params(body);
  for (const auto& [key, value] : p) {
    const bool known = key == "V0" || (kind == "square-well" && key == "d") ||
                       (kind == "exponential" && key == "a");
    if (!known) throw DomainError("potential: unknown parameter " + key + " for " + kind);
  }
  if (kind == "square-well") return square_well(need(p, "V0"), need(p, "d"));
  if (kind == "exponential") return exponential(need(p, "V0"), need(p, "a"));
  throw DomainError("potential: unknown kind '" + kind + "'");
}

double RadialPotential::operator()(double r) const {
  switch (kind_) {
    case Kind::free:
      return 0.0;
    case Kind::square_well:
      return r <= d_ ? -V0_ : 0.0;
    case Kind::exponential:
      return -V0_ * std::exp(-r / d_);
    case Kind::tabulated: {
      if (r <= r_.front()) return v_.front();
      if (r > r_.back()) return 0.0;
      const auto it = std::upper_bound(r_.begin(), r_.end(), r);
      const std::size_t j = std::min<std::size_t>(it - r_.begin(), r_.size() - 1);
      const double t = (r - r_[j - 1]) / (r_[j] - r_[j - 1]);
      return v_[j - 1] + t * (v_[j] - v_[j - 1]);
    }
  }
  return 0.0;
}

double RadialPotential::support_radius() const {
  switch (kind_) {
    case Kind::free:
      return 1.0;
    case Kind::square_well:
      return d_;
    case Kind::exponential:
      return HUGE_VAL;
    case Kind::tabulated:
      return r_.back();
  }
  return 0.0;
}

double RadialPotential::tail_radius(double tol) const {
  if (kind_ != Kind::exponential) return support_radius();
  // int_R^inf r |V0| e^{-r/a} dr = |V0| a (R + a) e^{-R/a}
  const double a = d_, v = std::abs(V0_);
  auto tail = [&](double R) { return v * a * (R + a) * std::exp(-R / a); };
  if (v == 0.0 || tail(0.0) <= tol) return 0.0;
  double lo = 0.0, hi = a;
  while (tail(hi) > tol) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (tail(mid) > tol ? lo : hi) = mid;
  }
  return hi;
}

namespace {

double moment(const RadialPotential& p, bool second) {
  using K = RadialPotential::Kind;
  const double v = std::abs(p.depth()), d = p.radius();
  switch (p.kind()) {
    case K::free:
      return 0.0;
    case K::square_well:
      return second ? v * (d * d / 2.0 + d * d * d / 3.0) : v * d * d / 2.0;
    case K::exponential:
      return second ? v * (d * d + 2.0 * d * d * d) : v * d * d;
    case K::tabulated: {
      auto f = [&](double r) -> std::complex<double> {
        return r * (second ? 1.0 + r : 1.0) * std::abs(p(r));
      };
      std::vector<double> nodes{0.0};
      const auto& rs = p.sample_r();
      const auto& vs = p.sample_v();
      for (std::size_t i = 0; i < rs.size(); ++i) {
        nodes.push_back(rs[i]);
        if (i + 1 < rs.size() && (vs[i] > 0.0) != (vs[i + 1] > 0.0) && vs[i + 1] != 0.0 &&
            vs[i] != 0.0)
          nodes.push_back(rs[i] + (rs[i + 1] - rs[i]) * vs[i] / (vs[i] - vs[i + 1]));
      }
      double sum = 0.0;
      for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        sum += num::integrate_checked(f, nodes[i], nodes[i + 1], {1e-15, 1e-12, 200}).real();
      return sum;
    }
  }
  return 0.0;
}

}  // namespace

double RadialPotential::i1() const { return moment(*this, false); }
double RadialPotential::i2() const { return moment(*this, true); }

double RadialPotential::depth_scale() const {
  switch (kind_) {
    case Kind::free:
      return 0.0;
    case Kind::square_well:
    case Kind::exponential:
      return std::abs(V0_);
    case Kind::tabulated: {
      double m = 0.0;
      for (double x : v_) m = std::max(m, std::abs(x));
      return m;
    }
  }
  return 0.0;
}

std::vector<double> RadialPotential::breakpoints() const {
  switch (kind_) {
    case Kind::square_well:
      return {d_};
    case Kind::tabulated:
      return r_;
    default:
      return {};
  }
}

std::pair<double, double> RadialPotential::matching_window() const {
  switch (kind_) {
    case Kind::free:
      return {0.5, 1.0};
    case Kind::square_well:
      return {0.5 * d_, d_};
    case Kind::exponential:
      return {0.5 * d_, 2.0 * d_};
    case Kind::tabulated:
      return {0.5 * r_.back(), r_.back()};
  }
  return {0.5, 1.0};
}

std::string RadialPotential::describe() const {
  switch (kind_) {
    case Kind::free:
      return "free";
    case Kind::square_well:
      return "square-well:V0=" + fmt(V0_) + ",d=" + fmt(d_);
    case Kind::exponential:
      return "exponential:V0=" + fmt(V0_) + ",a=" + fmt(d_);
    case Kind::tabulated:
      return "file:" + source_;
  }
  return {};
}

}  // namespace anyon
