#pragma once

// Batch front-end: a run configuration is expanded into a parameter grid,
// every grid point is evaluated (concurrently), and the rows are emitted in
// deterministic order as CSV or JSON.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fockstat/core.hpp"

namespace fockstat::cli {

/// "3", "2..6" or "1,2,5". Ranges are inclusive; an empty range throws.
std::vector<int> parseIntList(const std::string& text);
/// Comma separated rationals, e.g. "0,1/2,1".
std::vector<Rational> parseRationalList(const std::string& text);
std::vector<double> parseDoubleList(const std::string& text);

struct RunConfig {
  std::string command;  // count | enumerate | gram | params | spectrum | verify
  std::string family;

  std::vector<int> M{4};
  std::vector<int> N{2};
  std::vector<int> p{1};
  std::vector<int> q{1};
  std::vector<int> m{2};
  std::vector<int> n{1};
  std::vector<int> k{1};
  std::vector<int> alpha{1};
  std::vector<Rational> lambda{Rational(1)};
  std::vector<Rational> g{Rational(0)};
  std::vector<double> L{1.0};
  std::vector<int> X;
  std::vector<int> indices;
  std::vector<int> pattern;
  std::vector<int> gaps;
  int i1 = 1;
  std::optional<int> M0;
  std::string side = "right";
  std::string bracket = "floor";
  std::string stepAtZero = "one";
  std::string anchor = "symmetric";
  std::string algebra = "quon:0";

  bool oracle = false;
  bool all = false;
  std::string identity;
  std::uint64_t cap = 20'000'000;
  std::string format = "csv";
  std::string out;
  unsigned threads = 0;

  /// Throws std::invalid_argument for unknown commands/formats, empty grids
  /// or a zero cap.
  void validate() const;
};

using Cell = std::variant<std::monostate, std::string, long long, Integer, Rational, double, bool>;

struct ResultTable {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
  /// Set when any oracle comparison or identity check failed.
  bool failed = false;
};

ResultTable runCount(const RunConfig& config);
ResultTable runEnumerate(const RunConfig& config);
ResultTable runGram(const RunConfig& config);
ResultTable runParams(const RunConfig& config);
ResultTable runSpectrum(const RunConfig& config);
ResultTable runVerify(const RunConfig& config);

/// Dispatches on config.command.
ResultTable run(const RunConfig& config);

void writeCsv(const ResultTable& table, std::ostream& out);
void writeJson(const ResultTable& table, std::ostream& out);
void write(const ResultTable& table, const std::string& format, std::ostream& out);

}  // namespace fockstat::cli
