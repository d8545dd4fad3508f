#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "anyon/cli.hpp"

namespace anyon::cli {

namespace {

constexpr const char* kUnits =
    "atomic units: hbar = 1, reduced mass 1/2, E = k^2, angles in radians";

std::string cell(double v, bool integer) {
  if (std::isnan(v)) return "";
  char buf[40];
  if (integer)
    std::snprintf(buf, sizeof buf, "%.0f", v);
  else
    std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

// Summary entries are kept as text; JSON gets numbers and booleans where
// the text is one.
nlohmann::ordered_json summary_value(const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  if (v == "nan" || v == "inf" || v == "-inf") return nullptr;
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (!v.empty() && end == v.c_str() + v.size()) {
    if (v.find_first_of(".eE") == std::string::npos) return static_cast<long long>(x);
    return x;
  }
  return v;
}

std::string render_csv(const Document& doc) {
  std::ostringstream o;
  o << "# " << kProgram << " " << kVersion << "\n";
  o << "# command: " << doc.command << "\n";
  o << "# units: " << kUnits << "\n";
  for (const auto& [k, v] : doc.parameters) o << "# param " << k << " = " << v << "\n";
  for (const auto& n : doc.notes) o << "# " << n << "\n";
  const Table& t = doc.table;
  for (std::size_t c = 0; c < t.columns.size(); ++c) o << (c ? "," : "") << t.columns[c];
  o << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) o << (c ? "," : "") << cell(row[c], t.integer[c]);
    o << "\n";
  }
  for (const auto& [k, v] : doc.summary) o << "# summary " << k << " = " << v << "\n";
  return o.str();
}

std::string render_json(const Document& doc) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["program"] = kProgram;
  j["version"] = kVersion;
  j["command"] = doc.command;
  j["units"] = kUnits;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : doc.parameters) params[k] = v;
  j["parameters"] = params;
  j["notes"] = doc.notes;
  j["columns"] = doc.table.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : doc.table.rows) {
    ordered_json r = ordered_json::array();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (std::isnan(row[c]))
        r.push_back(nullptr);
      else if (doc.table.integer[c])
        r.push_back(static_cast<long long>(row[c]));
      else
        r.push_back(row[c]);
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  ordered_json summary = ordered_json::object();
  for (const auto& [k, v] : doc.summary) summary[k] = summary_value(v);
  j["summary"] = summary;
  return j.dump(1) + "\n";
}

}  // namespace

void Table::add_column(std::string name, bool is_integer) {
  columns.push_back(std::move(name));
  integer.push_back(is_integer);
}

std::string render(const Document& doc, Format fmt) {
  return fmt == Format::csv ? render_csv(doc) : render_json(doc);
}

std::string plot_script(const Document& doc, const std::string& csv_path) {
  std::ostringstream o;
  o << "# plot for: " << kProgram << " " << doc.command << "\n";
  o << "import csv\n"
       "import sys\n"
       "import matplotlib\n"
       "matplotlib.use('Agg')\n"
       "import matplotlib.pyplot as plt\n\n";
  o << "path = " << nlohmann::json(csv_path).dump() << "\n";
  o << "with open(path) as fh:\n"
       "    reader = csv.reader(line for line in fh if not line.startswith('#'))\n"
       "    header = next(reader)\n"
       "    rows = [[float(c) if c else float('nan') for c in r] for r in reader]\n"
       "cols = list(zip(*rows))\n"
       "fig, ax = plt.subplots()\n"
       "for name, ys in zip(header[1:], cols[1:]):\n"
       "    ax.plot(cols[0], ys, label=name)\n"
       "ax.set_xlabel(header[0])\n"
       "ax.legend(fontsize='small')\n"
       "fig.savefig(sys.argv[1] if len(sys.argv) > 1 else path + '.png', dpi=150)\n";
  return o.str();
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f) {
  const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace anyon::cli
