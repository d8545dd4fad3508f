#pragma once

// Command-line front end: grid and token parsing, tabular output, commands.

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace anyon::cli {

inline constexpr const char* kProgram = "anyonscat";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kInvalid = 2, kNoConvergence = 3 };

/// start:stop:count[:lin|log]
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  bool log = false;
  std::vector<double> values() const;
  std::string str() const;
};

GridSpec parse_grid(const std::string& text);

/// Real number or one of "inf", "+inf", "-inf".
double parse_extended_real(const std::string& text);
std::string format_number(double x);

/// Comma-separated extended reals.
std::vector<double> parse_list(const std::string& text);

/// Flat "key = value" file; '#' starts a comment. Returns "--key=value" tokens.
std::vector<std::string> read_config(const std::string& path);

enum class Format { csv, json };

struct Table {
  std::vector<std::string> columns;
  std::vector<bool> integer;              // per column, printed without exponent
  std::vector<std::vector<double>> rows;  // NaN cells are blank (null in JSON)
  void add_column(std::string name, bool is_integer = false);
};

struct Document {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> notes;  // free-form header lines
  Table table;
  std::vector<std::pair<std::string, std::string>> summary;
};

std::string render(const Document& doc, Format fmt);

/// Python/matplotlib script that plots the first column of a CSV against the rest.
std::string plot_script(const Document& doc, const std::string& csv_path);

/// Maps f over [0, n) on `jobs` threads; results keep index order and the
/// exception of the lowest failing index is rethrown.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f);

/// Full command line without the program name. Writes the rendered document
/// to `out` (or the --output file) only on success.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anyon::cli
