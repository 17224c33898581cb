#include "fockstat/cli.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fockstat/counting.hpp"
#include "fockstat/cs_model.hpp"
#include "fockstat/haldane_params.hpp"
#include "fockstat/parallel.hpp"

namespace fockstat::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

int parseInt(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer: '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("bad integer: '" + text + "'");
  return value;
}

}  // namespace

std::vector<int> parseIntList(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) throw std::invalid_argument("empty list element in '" + text + "'");
    auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parseInt(part));
      continue;
    }
    const int lo = parseInt(part.substr(0, dots));
    const int hi = parseInt(part.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range '" + part + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<Rational> parseRationalList(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(parseRational(part));
  return out;
}

std::vector<double> parseDoubleList(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) {
    if (part == "2pi") {
      out.push_back(2.0 * 3.14159265358979323846);
      continue;
    }
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number: '" + part + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad number: '" + part + "'");
    out.push_back(v);
  }
  return out;
}

void RunConfig::validate() const {
  static const std::vector<std::string> commands{"count", "enumerate", "gram",
                                                 "params", "spectrum", "verify"};
  if (std::find(commands.begin(), commands.end(), command) == commands.end())
    throw std::invalid_argument("unknown command '" + command + "'");
  if (format != "csv" && format != "json")
    throw std::invalid_argument("format must be csv or json");
  if (cap == 0) throw std::invalid_argument("cap must be positive");
  for (const auto* grid : {&M, &N, &p, &q, &m, &n, &k, &alpha}) {
    if (grid->empty()) throw std::invalid_argument("parameter grids must be non-empty");
  }
  if (lambda.empty() || g.empty() || L.empty())
    throw std::invalid_argument("parameter grids must be non-empty");
}

namespace {

// --- grid evaluation --------------------------------------------------------

struct Evaluated {
  std::vector<std::vector<Cell>> rows;
  bool failed = false;
};

struct Point {
  std::vector<Cell> params;
  std::function<Evaluated()> eval;
};

std::string cellText(const Cell& cell);

std::string describePoint(const std::vector<std::string>& header, const std::vector<Cell>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size() && i < header.size(); ++i) {
    if (i) out += ", ";
    out += header[i] + "=" + cellText(params[i]);
  }
  return out;
}

ResultTable evaluate(std::vector<std::string> header, std::vector<Point> points,
                     unsigned threads) {
  ResultTable table;
  table.header = std::move(header);
  auto results = parallelMap<Evaluated>(
      points.size(),
      [&](std::size_t i) {
        try {
          return points[i].eval();
        } catch (const CapacityExceeded& e) {
          throw CapacityExceeded(std::string(e.what()) + " at grid point " +
                                 describePoint(table.header, points[i].params));
        }
      },
      threads);
  for (std::size_t i = 0; i < points.size(); ++i) {
    table.failed = table.failed || results[i].failed;
    for (auto& tail : results[i].rows) {
      std::vector<Cell> row = points[i].params;
      row.insert(row.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

Evaluated single(std::vector<Cell> tail, bool failed = false) {
  Evaluated e;
  e.rows.push_back(std::move(tail));
  e.failed = failed;
  return e;
}

// A closed form compared (optionally) to an enumeration oracle.
Evaluated compareCount(bool oracleOn, const std::function<Integer()>& closed,
                       const std::function<std::optional<Integer>()>& oracle) {
  Cell value;
  std::optional<Integer> closedValue;
  try {
    closedValue = closed();
    value = *closedValue;
  } catch (const std::domain_error&) {
    value = std::string("domain-error");
  }
  if (!oracleOn) return single({value});
  const auto reference = oracle();
  if (!reference || !closedValue) {
    return single({value, reference ? Cell(*reference) : Cell{}, Cell{}});
  }
  const bool agrees = *closedValue == *reference;
  return single({value, *reference, agrees}, !agrees);
}

std::string joinState(const MonomialState& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out;
}

std::optional<int> asNonNegativeInt(const Rational& r) {
  if (boost::multiprecision::denominator(r) != 1 || r < 0) return std::nullopt;
  return boost::multiprecision::numerator(r).convert_to<int>();
}

Bracket parseBracket(const std::string& text) {
  if (text == "floor") return Bracket::Floor;
  if (text == "strict") return Bracket::Strict;
  throw std::invalid_argument("bracket must be floor or strict");
}

Side parseSide(const std::string& text) {
  if (text == "right") return Side::Right;
  if (text == "left") return Side::Left;
  throw std::invalid_argument("side must be left or right");
}

RestrictionRule ruleFor(const std::string& family, int p, int q, int m, const std::vector<int>& X) {
  if (family == "none" || family == "bose" || family == "fermi") return RestrictionRule::none();
  if (family == "cs") return RestrictionRule::cs(p, q);
  if (family == "x-fermi") return RestrictionRule::xFermi(X);
  if (family == "x-bose") return RestrictionRule::xBose(X);
  if (family == "window-min") return RestrictionRule::windowMin(p);
  if (family == "window-max") return RestrictionRule::windowMax(p);
  if (family == "gentile") return RestrictionRule::gentile(m);
  if (family == "total-cap") return RestrictionRule::totalCap(p);
  throw std::invalid_argument("unknown restriction family '" + family + "'");
}

std::vector<std::string> withOracleColumns(std::vector<std::string> header, bool oracle) {
  header.push_back("value");
  if (oracle) {
    header.push_back("oracle");
    header.push_back("agrees");
  }
  return header;
}

}  // namespace

// --- count ----------------------------------------------------------------

ResultTable runCount(const RunConfig& c) {
  const EnumerationLimits limits{c.cap};
  const auto quon0 = AlgebraSpec::quon(0);
  const std::string& f = c.family;
  std::vector<std::string> header;
  std::vector<Point> points;

  auto add = [&](std::vector<Cell> params, std::function<Integer()> closed,
                 std::function<std::optional<Integer>()> oracle) {
    const bool on = c.oracle;
    points.push_back({std::move(params), [on, closed, oracle] { return compareCount(on, closed, oracle); }});
  };

  if (f == "cs" || f == "cs-sum") {
    header = {"M", "N", "p", "q"};
    for (int M : c.M) for (int N : c.N) for (int p : c.p) for (int q : c.q) {
      add({(long long)M, (long long)N, (long long)p, (long long)q},
          [=] { return f == "cs" ? countCS(M, N, p, q) : countCSSum(M, N, p, q); },
          [=]() -> std::optional<Integer> {
            return countEnumerated(M, N, RestrictionRule::cs(p, q), quon0, limits);
          });
    }
  } else if (f == "cs-bose") {
    header = {"M", "N", "q"};
    for (int M : c.M) for (int N : c.N) for (int q : c.q) {
      add({(long long)M, (long long)N, (long long)q}, [=] { return countCSBose(M, N, q); },
          [=]() -> std::optional<Integer> {
            return countEnumerated(M, N, RestrictionRule::cs(0, q), quon0, limits);
          });
    }
  } else if (f == "haldane-wu" || f == "real") {
    const bool wu = f == "haldane-wu";
    header = {"M", "N", wu ? "g" : "lambda"};
    for (int M : c.M) for (int N : c.N) for (const auto& x : wu ? c.g : c.lambda) {
      add({(long long)M, (long long)N, x},
          [=] { return wu ? countHaldaneWu(M, N, x) : countReal(M, N, x); },
          [=]() -> std::optional<Integer> {
            const auto p = asNonNegativeInt(x);
            if (!p) return std::nullopt;
            return countEnumerated(M, N, RestrictionRule::cs(*p, 1), quon0, limits);
          });
    }
  } else if (f == "x-fermi" || f == "x-bose") {
    const bool fermi = f == "x-fermi";
    const auto rule = fermi ? RestrictionRule::xFermi(c.X) : RestrictionRule::xBose(c.X);
    header = {"M", "N"};
    for (int M : c.M) for (int N : c.N) {
      add({(long long)M, (long long)N},
          [=, X = c.X] { return fermi ? countXFermi(M, N, X) : countXBose(M, N, X); },
          [=]() -> std::optional<Integer> { return countEnumerated(M, N, rule, quon0, limits); });
    }
  } else if (f == "gentile") {
    header = {"M", "N", "m"};
    for (int M : c.M) for (int N : c.N) for (int m : c.m) {
      add({(long long)M, (long long)N, (long long)m}, [=] { return countGentile(M, N, m); },
          [=]() -> std::optional<Integer> {
            return countEnumerated(M, N, RestrictionRule::gentile(m), AlgebraSpec::bose(), limits);
          });
    }
  } else if (f == "para-fermi" || f == "para-bose") {
    const auto kind = f == "para-fermi" ? Statistic::Fermi : Statistic::Bose;
    header = {"M", "N", "p"};
    for (int M : c.M) for (int N : c.N) for (int p : c.p) {
      add({(long long)M, (long long)N, (long long)p},
          [=] { return countParaRestricted(M, N, p, kind); },
          [=]() -> std::optional<Integer> {
            const auto alg = kind == Statistic::Fermi ? AlgebraSpec::fermi() : AlgebraSpec::bose();
            return countEnumerated(M, N, RestrictionRule::totalCap(p), alg, limits);
          });
    }
  } else if (f == "window-min") {
    header = {"M", "N", "p"};
    for (int M : c.M) for (int N : c.N) for (int p : c.p) {
      add({(long long)M, (long long)N, (long long)p}, [=] { return countCSInterpolation(M, N, p); },
          [=]() -> std::optional<Integer> {
            return countEnumerated(M, N, RestrictionRule::windowMin(p), AlgebraSpec::fermi(), limits);
          });
    }
  } else if (f == "bose" || f == "fermi") {
    const bool bose = f == "bose";
    header = {"M", "N"};
    for (int M : c.M) for (int N : c.N) {
      add({(long long)M, (long long)N},
          [=] { return bose ? binomial(M + N - 1, N) : binomial(M, N); },
          [=]() -> std::optional<Integer> {
            return countEnumerated(M, N, RestrictionRule::none(),
                                   bose ? AlgebraSpec::bose() : AlgebraSpec::fermi(), limits);
          });
    }
  } else {
    throw std::invalid_argument("unknown count family '" + f + "'");
  }
  return evaluate(withOracleColumns(header, c.oracle), std::move(points), c.threads);
}

// --- enumerate --------------------------------------------------------------

ResultTable runEnumerate(const RunConfig& c) {
  const EnumerationLimits limits{c.cap};
  std::vector<Point> points;
  for (int M : c.M) for (int N : c.N) for (int p : c.p) for (int q : c.q) for (int m : c.m) {
    const auto rule = ruleFor(c.family.empty() ? "none" : c.family, p, q, m, c.X);
    points.push_back({{(long long)M, (long long)N, rule.describe()}, [=] {
                        Evaluated e;
                        long long index = 0;
                        for (const auto& s : enumerateAllowed(M, N, rule, limits)) {
                          e.rows.push_back({index++, joinState(s)});
                        }
                        return e;
                      }});
  }
  // Rules that ignore p, q or m would repeat rows; drop duplicate points.
  std::vector<Point> unique;
  for (auto& pt : points) {
    bool seen = false;
    for (const auto& u : unique) seen = seen || cellText(u.params[0]) + cellText(u.params[1]) + cellText(u.params[2]) ==
                                                   cellText(pt.params[0]) + cellText(pt.params[1]) + cellText(pt.params[2]);
    if (!seen) unique.push_back(std::move(pt));
  }
  return evaluate({"M", "N", "rule", "index", "state"}, std::move(unique), c.threads);
}

// --- gram -------------------------------------------------------------------

ResultTable runGram(const RunConfig& c) {
  const auto alg = parseAlgebra(c.algebra);
  const int p = c.p.front(), q = c.q.front(), m = c.m.front();
  const auto rule = ruleFor(c.family.empty() ? "none" : c.family, p, q, m, c.X);
  std::vector<MonomialState> multisets;
  if (!c.indices.empty()) {
    multisets.push_back(c.indices);
  } else {
    for (int M : c.M) for (int N : c.N) {
      if (multisetCount(M, N) > c.cap) throw CapacityExceeded("gram grid exceeds cap at M=" + std::to_string(M) + ", N=" + std::to_string(N));
      forEachMultiset(M, N, [&](const MonomialState& s) { multisets.push_back(s); });
    }
  }
  std::vector<Point> points;
  for (const auto& s : multisets) {
    points.push_back({{joinState(s), alg.name(), rule.describe()}, [=] {
                        const auto gm = gramMatrix(s, alg, rule);
                        return single({(long long)gm.dimension(), (long long)exactRank(gm.entries)});
                      }});
  }
  return evaluate({"multiset", "algebra", "rule", "dimension", "rank"}, std::move(points), c.threads);
}

// --- params -----------------------------------------------------------------

namespace {

Evaluated reportRow(bool oracleOn, const Rational& closed, const std::function<std::optional<Rational>()>& definitional) {
  if (!oracleOn) return single({closed});
  const auto d = definitional();
  if (!d) return single({closed, Cell{}, Cell{}});
  const bool agrees = *d == closed;
  return single({closed, *d, agrees}, !agrees);
}

}  // namespace

ResultTable runParams(const RunConfig& c) {
  const std::string& f = c.family;
  std::vector<std::string> header;
  std::vector<Point> points;
  const bool on = c.oracle;

  auto add = [&](std::vector<Cell> params, std::function<Rational()> closed,
                 std::function<std::optional<Rational>()> definitional) {
    points.push_back({std::move(params), [on, closed, definitional] { return reportRow(on, closed(), definitional); }});
  };

  if (f == "cs-finite") {
    const Side side = parseSide(c.side);
    const Bracket bracket = parseBracket(c.bracket);
    header = {"M", "i1", "N", "p", "q", "side", "bracket"};
    for (int M : c.M) for (int N : c.N) for (int p : c.p) for (int q : c.q) {
      const int i1 = c.i1;
      add({(long long)M, (long long)i1, (long long)N, (long long)p, (long long)q, c.side, c.bracket},
          [=] { return gCSFinite(M, i1, N, p, q, side, bracket); },
          [=]() -> std::optional<Rational> { return gCSDefinitional(M, i1, N, p, q, side); });
    }
  } else if (f == "cs-d1") {
    const Bracket bracket = parseBracket(c.bracket);
    const StepAtZero step = c.stepAtZero == "zero" ? StepAtZero::Zero : StepAtZero::One;
    header = {"M", "i1", "N", "p", "q", "bracket", "step0"};
    for (int M : c.M) for (int N : c.N) for (int p : c.p) for (int q : c.q) {
      const int i1 = c.i1;
      add({(long long)M, (long long)i1, (long long)N, (long long)p, (long long)q, c.bracket, c.stepAtZero},
          [=] { return Rational(oneParticleDimensionCS(M, i1, N, p, q, bracket, step)); },
          [=]() -> std::optional<Rational> {
            return Rational(static_cast<long long>(oneParticleDimension(
                closestPackedBlock(M, i1, N, p), buildLattice(M), AlgebraSpec::quon(0), RestrictionRule::cs(p, q))));
          });
    }
  } else if (f == "cs-average") {
    const Bracket bracket = parseBracket(c.bracket);
    header = {"p", "q", "M0", "N", "i1"};
    for (int p : c.p) for (int q : c.q) for (int N : c.N) {
      const int i1 = c.i1;
      const int M0 = c.M0.value_or(N * p + q + i1);
      add({(long long)p, (long long)q, (long long)M0, (long long)N, (long long)i1},
          [=] { return gAverageCS(p, q, M0, N, i1, bracket); },
          [=]() -> std::optional<Rational> { return Rational(p, q); });
    }
  } else if (f == "cs-haldane") {
    header = {"p", "q", "nN"};
    for (int p : c.p) for (int q : c.q) for (int n : c.n) {
      add({(long long)p, (long long)q, (long long)n}, [=] { return gHaldaneCS(p, q, n); },
          [] { return std::optional<Rational>{}; });
    }
  } else if (f == "gentile-average") {
    const int M = std::accumulate(c.pattern.begin(), c.pattern.end(), 0);
    std::string pattern;
    for (std::size_t i = 0; i < c.pattern.size(); ++i) pattern += (i ? " " : "") + std::to_string(c.pattern[i]);
    header = {"pattern", "M"};
    add({pattern, (long long)M}, [=, pat = c.pattern] { return gGentileAverage(pat, M); },
        [=, pat = c.pattern]() -> std::optional<Rational> { return gGentileAverageDefinitional(pat, M); });
  } else if (f == "single-gentile") {
    header = {"n", "m"};
    for (int m : c.m) for (int n : c.n) {
      if (n >= m) continue;
      add({(long long)n, (long long)m}, [=] { return gSingleGentile(n, m); },
          [=]() -> std::optional<Rational> { return gSingleGentileDefinitional(n, m); });
    }
  } else if (f == "single-gentile-average") {
    header = {"m"};
    for (int m : c.m) {
      add({(long long)m}, [=] { return gSingleGentileAverage(m); },
          [=]() -> std::optional<Rational> { return Rational(1, m); });
    }
  } else if (f == "para-fermi" || f == "para-bose") {
    const auto kind = f == "para-fermi" ? Statistic::Fermi : Statistic::Bose;
    header = {"M", "n", "k", "p"};
    for (int M : c.M) for (int n : c.n) for (int k : c.k) for (int p : c.p) {
      if (n + k > p + 1 || n + k - 1 > M) continue;
      add({(long long)M, (long long)n, (long long)k, (long long)p},
          [=] { return gParaRestricted(M, n, k, p, kind); },
          [=]() -> std::optional<Rational> { return gParaDefinitional(M, n, k, p, kind); });
    }
  } else {
    throw std::invalid_argument("unknown params family '" + f + "'");
  }
  return evaluate(withOracleColumns(header, on), std::move(points), c.threads);
}

// --- spectrum ---------------------------------------------------------------

ResultTable runSpectrum(const RunConfig& c) {
  const MomentumAnchor anchor = c.anchor == "literal" ? MomentumAnchor::Literal : MomentumAnchor::Symmetric;
  if (c.anchor != "literal" && c.anchor != "symmetric")
    throw std::invalid_argument("anchor must be symmetric or literal");
  std::vector<Point> points;
  std::vector<std::vector<int>> fillings;
  if (!c.gaps.empty()) {
    fillings.push_back(c.gaps);
  } else {
    for (int N : c.N) fillings.push_back(std::vector<int>(static_cast<std::size_t>(N), 0));
  }
  for (const auto& fill : fillings) for (const auto& lambda : c.lambda) for (double L : c.L) {
    std::string fillText;
    for (std::size_t i = 0; i < fill.size(); ++i) fillText += (i ? " " : "") + std::to_string(fill[i]);
    const bool ground = std::all_of(fill.begin(), fill.end(), [](int v) { return v == 0; });
    const bool on = c.oracle;
    points.push_back({{(long long)fill.size(), fillText, lambda, L, c.anchor}, [=] {
                        const Filling filling{fill, lambda, L};
                        const auto ks = pseudomomenta(filling, anchor);
                        std::ostringstream text;
                        text.precision(15);
                        for (std::size_t i = 0; i < ks.size(); ++i) text << (i ? " " : "") << ks[i];
                        const double e = energy(ks);
                        if (!on) return single({text.str(), e});
                        if (!ground) return single({text.str(), e, Cell{}, Cell{}});
                        const double e0 = groundEnergy(static_cast<int>(fill.size()), lambda, L);
                        const bool agrees = std::abs(e - e0) <= 1e-12 * std::max(std::abs(e0), 1e-300) ||
                                            (e0 == 0.0 && std::abs(e) < 1e-12);
                        return single({text.str(), e, e0, agrees}, !agrees);
                      }});
  }
  std::vector<std::string> header{"N", "filling", "lambda", "L", "anchor", "momenta", "energy"};
  if (c.oracle) {
    header.push_back("ground_energy");
    header.push_back("agrees");
  }
  return evaluate(header, std::move(points), c.threads);
}

// --- verify -----------------------------------------------------------------

namespace {

struct Check {
  std::string name;
  std::string params;
  std::function<std::tuple<Cell, Cell, bool>()> run;
};

std::string kv(std::initializer_list<std::pair<const char*, long long>> items) {
  std::string out;
  for (const auto& [key, value] : items) out += (out.empty() ? "" : " ") + std::string(key) + "=" + std::to_string(value);
  return out;
}

std::tuple<Cell, Cell, bool> equal(const Integer& value, const Integer& expected) {
  return {value, expected, value == expected};
}
std::tuple<Cell, Cell, bool> equal(const Rational& value, const Rational& expected) {
  return {value, expected, value == expected};
}

std::vector<std::vector<int>> nonEmptySubsets(int upTo) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << upTo); ++mask) {
    std::vector<int> X;
    for (int b = 0; b < upTo; ++b) if (mask & (1 << b)) X.push_back(b + 1);
    out.push_back(X);
  }
  return out;
}

std::string joinInts(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

struct VerifyGrids {
  std::vector<int> M, N, p, q, m, n, alpha, averageM;
  std::vector<Rational> lambda;
  std::vector<std::vector<int>> Xs;
  std::vector<double> L;
};

VerifyGrids defaultGrids() {
  VerifyGrids g;
  g.M = parseIntList("1..8");
  g.N = parseIntList("1..3");
  g.p = parseIntList("0..3");
  g.q = parseIntList("1..3");
  g.m = parseIntList("1..4");
  g.n = parseIntList("0..3");
  g.alpha = parseIntList("1..5");
  g.averageM = parseIntList("1..50");
  g.lambda = parseRationalList("0,1/3,1/2,1,3/2,2");
  g.Xs = nonEmptySubsets(3);
  g.L = {1.0, 2.0 * 3.14159265358979323846};
  return g;
}

VerifyGrids gridsFrom(const RunConfig& c) {
  VerifyGrids g{c.M, c.N, c.p, c.q, c.m, c.n, c.alpha, c.M, c.lambda, {}, c.L};
  if (!c.X.empty()) g.Xs = {c.X};
  else g.Xs = nonEmptySubsets(3);
  return g;
}

const std::vector<std::string>& allIdentities() {
  static const std::vector<std::string> names{
      "avgG",        "binom",        "cs-closed",      "cs-interp",   "cs-diagonal",
      "cs-bose",     "haldane-wu",   "real",           "x-fermi",     "x-bose",
      "gentile",     "window-min",   "window-max",     "cs-finite",   "cs-d1",
      "cs-average",  "para",         "gentile-average", "single-gentile", "gram-ranks",
      "ground-energy", "karabali-nair"};
  return names;
}

void addChecks(const std::string& name, const VerifyGrids& g, const EnumerationLimits& limits,
               std::vector<Check>& out) {
  const auto quon0 = AlgebraSpec::quon(0);
  auto push = [&](std::string params, std::function<std::tuple<Cell, Cell, bool>()> fn) {
    out.push_back({name, std::move(params), std::move(fn)});
  };

  if (name == "avgG") {
    for (int p : g.p) for (int q : g.q) {
      if (p < 0 || q < 1) continue;
      for (const Bracket b : {Bracket::Floor, Bracket::Strict}) {
        push(kv({{"p", p}, {"q", q}}) + (b == Bracket::Floor ? " bracket=floor" : " bracket=strict") +
                 " M=" + std::to_string(g.averageM.front()) + ".." + std::to_string(g.averageM.back()),
             [=, Ms = g.averageM]() -> std::tuple<Cell, Cell, bool> {
               long long passed = 0;
               for (int M : Ms) passed += verifyAverageIdentity(p, q, M, b) ? 1 : 0;
               return {passed, (long long)Ms.size(), passed == (long long)Ms.size()};
             });
      }
    }
  } else if (name == "binom") {
    for (int n : g.n) for (int a : g.alpha) {
      if (n < 0 || a < 1) continue;
      push(kv({{"n", n}, {"alpha", a}}), [=]() -> std::tuple<Cell, Cell, bool> {
        return {binomial(n + a, n + 1), Cell{}, verifyBinomialIdentity(n, a)};
      });
    }
  } else if (name == "cs-closed") {
    for (int M : g.M) for (int N : g.N) for (int p : g.p) for (int q : g.q) {
      if (M < 1 || N < 1 || p < 0 || q < 1) continue;
      push(kv({{"M", M}, {"N", N}, {"p", p}, {"q", q}}), [=] {
        return equal(countCS(M, N, p, q), countEnumerated(M, N, RestrictionRule::cs(p, q), quon0, limits));
      });
      push(kv({{"M", M}, {"N", N}, {"p", p}, {"q", q}}) + " form=sum",
           [=] { return equal(countCSSum(M, N, p, q), countCS(M, N, p, q)); });
    }
  } else if (name == "cs-interp") {
    for (int M : g.M) for (int N : g.N) for (int p : g.p) {
      if (M < 1 || N < 1 || p < 0) continue;
      push(kv({{"M", M}, {"N", N}, {"p", p}}),
           [=] { return equal(countCS(M, N, p, 1), countCSInterpolation(M, N, p)); });
    }
  } else if (name == "cs-diagonal") {
    for (int M : g.M) for (int N : g.N) for (int q : g.q) {
      if (M < 1 || N < 1 || q < 1) continue;
      push(kv({{"M", M}, {"N", N}, {"p", q}, {"q", q}}),
           [=] { return equal(countCSDiagonal(M, N, q), countCS(M, N, q, q)); });
    }
  } else if (name == "cs-bose") {
    for (int M : g.M) for (int N : g.N) for (int q : g.q) {
      if (M < 1 || N < 1 || q < 1) continue;
      push(kv({{"M", M}, {"N", N}, {"q", q}}), [=] {
        return equal(countCSBose(M, N, q), countEnumerated(M, N, RestrictionRule::cs(0, q), quon0, limits));
      });
    }
  } else if (name == "haldane-wu") {
    for (int M : g.M) for (int N : g.N) for (int p : g.p) {
      if (M < 1 || N < 1 || p < 0) continue;
      push(kv({{"M", M}, {"N", N}, {"g", p}}),
           [=] { return equal(countHaldaneWu(M, N, p), countCS(M, N, p, 1)); });
    }
  } else if (name == "real") {
    for (int M : g.M) for (int N : g.N) for (int p : g.p) {
      if (M < 1 || N < 1 || p < 0) continue;
      push(kv({{"M", M}, {"N", N}, {"lambda", p}}),
           [=] { return equal(countReal(M, N, p), countCSInterpolation(M, N, p)); });
    }
    for (int M : g.M) for (int N : g.N) {
      if (M < 1 || N < 1) continue;
      push(kv({{"M", M}, {"N", N}}) + " monotone-in-lambda", [=, ls = g.lambda]() -> std::tuple<Cell, Cell, bool> {
        auto sorted = ls;
        std::sort(sorted.begin(), sorted.end());
        bool ok = true;
        for (std::size_t i = 1; i < sorted.size(); ++i) ok = ok && countReal(M, N, sorted[i]) <= countReal(M, N, sorted[i - 1]);
        return {Cell{}, Cell{}, ok};
      });
    }
  } else if (name == "x-fermi" || name == "x-bose") {
    const bool fermi = name == "x-fermi";
    for (const auto& X : g.Xs) for (int M : g.M) for (int N : g.N) {
      if (M < 1 || N < 0) continue;
      push("X={" + joinInts(X) + "} " + kv({{"M", M}, {"N", N}}), [=] {
        const auto rule = fermi ? RestrictionRule::xFermi(X) : RestrictionRule::xBose(X);
        const Integer direct(static_cast<unsigned long long>(enumerateAllowed(M, N, rule, limits).size()));
        return equal(fermi ? countXFermi(M, N, X) : countXBose(M, N, X), direct);
      });
    }
  } else if (name == "gentile") {
    for (int M : g.M) for (int N : g.N) for (int m : g.m) {
      if (M < 1 || N < 0 || m < 1) continue;
      push(kv({{"M", M}, {"N", N}, {"m", m}}), [=] {
        return equal(countGentile(M, N, m),
                     countEnumerated(M, N, RestrictionRule::gentile(m), AlgebraSpec::bose(), limits));
      });
      push(kv({{"M", M}, {"N", N}, {"m", m}}) + " bounds", [=]() -> std::tuple<Cell, Cell, bool> {
        const Integer d = countGentile(M, N, m);
        const Integer lo = binomial(M, N), hi = binomial(M + N - 1, N);
        bool ok = lo <= d && d <= hi;
        if (m == 1) ok = ok && d == lo;
        if (m >= N) ok = ok && d == hi;
        return {d, toString(lo) + ".." + toString(hi), ok};
      });
    }
  } else if (name == "window-min") {
    for (int M : g.M) for (int N : g.N) for (int p : g.p) {
      if (M < 1 || N < 0 || p < 1) continue;
      push(kv({{"M", M}, {"N", N}, {"p", p}}), [=] {
        return equal(countEnumerated(M, N, RestrictionRule::windowMin(p), AlgebraSpec::fermi(), limits),
                     countCSInterpolation(M, N, p));
      });
    }
  } else if (name == "window-max") {
    // Value: neighbour reading; expected: every-pair reading, which must
    // vanish once N > p + 1.
    for (int M : g.M) for (int N : g.N) for (int p : g.p) {
      if (M < 1 || N < 0 || p < 1) continue;
      push(kv({{"M", M}, {"N", N}, {"p", p}}), [=]() -> std::tuple<Cell, Cell, bool> {
        const WindowRule rule{p, WindowMode::Max};
        const Integer adjacent = countEnumerated(M, N, RestrictionRule::windowMax(p), AlgebraSpec::fermi(), limits);
        long long pairs = 0;
        for (const auto& s : enumerateAllowed(M, N, RestrictionRule::windowMax(p), limits)) {
          const bool distinct = std::adjacent_find(s.begin(), s.end()) == s.end();
          if (distinct && isAllowedAllPairs(s, rule)) ++pairs;
        }
        return {adjacent, pairs, N <= p + 1 || pairs == 0};
      });
    }
  } else if (name == "cs-finite") {
    // The strict bracket reproduces the Gram-rank value whenever the lattice
    // leaves room for one more closest-packed particle beyond the added one.
    for (int M : g.M) for (int N : g.N) for (int p : g.p) for (int q : g.q) {
      if (N < 1 || p < 1 || q < 1) continue;
      for (int i1 = 1; i1 <= M; ++i1) {
        for (const Side side : {Side::Right, Side::Left}) {
          const bool roomy = side == Side::Right
                                 ? static_cast<long long>(M) - i1 - static_cast<long long>(N + 1) * p + 1 >= 0
                                 : i1 - 2 * p >= 0 && static_cast<long long>(i1) + static_cast<long long>(N - 1) * p <= M;
          if (!roomy) continue;
          push(kv({{"M", M}, {"i1", i1}, {"N", N}, {"p", p}, {"q", q}}) +
                   (side == Side::Right ? " side=right" : " side=left"),
               [=] {
                 return equal(gCSFinite(M, i1, N, p, q, side, Bracket::Strict),
                              gCSDefinitional(M, i1, N, p, q, side));
               });
        }
      }
    }
  } else if (name == "cs-d1") {
    for (int M : g.M) for (int N : g.N) for (int p : g.p) for (int q : g.q) {
      if (N < 1 || p < 1 || q < 1) continue;
      for (int i1 = p; i1 + N * p - 1 <= M; ++i1) {
        push(kv({{"M", M}, {"i1", i1}, {"N", N}, {"p", p}, {"q", q}}), [=] {
          const auto block = closestPackedBlock(M, i1, N, p);
          const Integer def(static_cast<unsigned long long>(oneParticleDimension(
              block, buildLattice(M), AlgebraSpec::quon(0), RestrictionRule::cs(p, q))));
          return equal(oneParticleDimensionCS(M, i1, N, p, q, Bracket::Strict, StepAtZero::One), def);
        });
      }
    }
  } else if (name == "cs-average") {
    for (int p : g.p) for (int q : g.q) for (int N : g.N) {
      if (p < 0 || q < 1 || N < 1) continue;
      for (const Bracket b : {Bracket::Floor, Bracket::Strict}) {
        push(kv({{"p", p}, {"q", q}, {"N", N}}) + (b == Bracket::Floor ? " bracket=floor" : " bracket=strict"),
             [=] { return equal(gAverageCS(p, q, N * p + q + 1 + 5, N, 1, b), Rational(p, q)); });
      }
    }
  } else if (name == "para") {
    for (int M : g.M) for (int p : g.p) {
      if (M < 1 || p < 1) continue;
      for (int n = 1; n <= p; ++n) for (int k = 1; n + k <= p + 1; ++k) {
        if (n + k - 1 > M) continue;
        for (const auto kind : {Statistic::Fermi, Statistic::Bose}) {
          push(kv({{"M", M}, {"n", n}, {"k", k}, {"p", p}}) + (kind == Statistic::Fermi ? " fermi" : " bose"),
               [=] { return equal(gParaRestricted(M, n, k, p, kind), gParaDefinitional(M, n, k, p, kind)); });
        }
      }
    }
  } else if (name == "gentile-average") {
    // Occupation patterns on up to three oscillators with m <= 3 and at most
    // five particles, which keeps the Bose Gram matrices small.
    for (int m = 1; m <= 3; ++m) for (int M = 1; M <= 3; ++M) {
      std::vector<int> pattern(static_cast<std::size_t>(m + 1), 0);
      std::function<void(int, int)> rec = [&](int level, int left) {
        if (level == m) {
          pattern[static_cast<std::size_t>(m)] = left;
          if (left == M) return;  // all full
          int particles = 0;
          for (std::size_t i = 0; i < pattern.size(); ++i) particles += static_cast<int>(i) * pattern[i];
          if (particles > 5) return;
          std::string text;
          for (std::size_t i = 0; i < pattern.size(); ++i) text += (i ? "," : "") + std::to_string(pattern[i]);
          push("pattern=" + text, [=, pat = pattern] {
            return equal(gGentileAverage(pat, M), gGentileAverageDefinitional(pat, M));
          });
          return;
        }
        for (int v = 0; v <= left; ++v) {
          pattern[static_cast<std::size_t>(level)] = v;
          rec(level + 1, left - v);
        }
      };
      rec(0, M);
    }
  } else if (name == "single-gentile") {
    for (int m : g.m) {
      if (m < 1) continue;
      for (int n = 0; n < m; ++n) {
        push(kv({{"n", n}, {"m", m}}), [=] { return equal(gSingleGentile(n, m), gSingleGentileDefinitional(n, m)); });
      }
      push(kv({{"m", m}}) + " average", [=] { return equal(gSingleGentileAverage(m), Rational(1, m)); });
    }
  } else if (name == "gram-ranks") {
    for (int N : g.N) {
      if (N < 1 || N > 4) continue;
      MonomialState distinct;
      for (int i = 1; i <= N; ++i) distinct.push_back(i);
      long long fact = 1;
      for (int i = 2; i <= N; ++i) fact *= i;
      for (const auto& qv : {Rational(0), Rational(1, 2)}) {
        push(kv({{"N", N}}) + " quon:" + toString(qv), [=]() -> std::tuple<Cell, Cell, bool> {
          const long long r = static_cast<long long>(sectorDimension(distinct, AlgebraSpec::quon(qv)));
          return {r, fact, r == fact};
        });
      }
      push(kv({{"N", N}}) + " bose", [=]() -> std::tuple<Cell, Cell, bool> {
        const long long r = static_cast<long long>(sectorDimension(distinct, AlgebraSpec::bose()));
        return {r, 1LL, r == 1};
      });
      if (N >= 2) {
        MonomialState repeated = distinct;
        repeated.back() = repeated.front();
        push(kv({{"N", N}}) + " fermi-repeat", [=]() -> std::tuple<Cell, Cell, bool> {
          const long long r = static_cast<long long>(sectorDimension(repeated, AlgebraSpec::fermi()));
          return {r, 0LL, r == 0};
        });
      }
    }
  } else if (name == "ground-energy") {
    for (int N : g.N) for (const auto& lambda : g.lambda) for (double L : g.L) {
      if (N < 1) continue;
      std::ostringstream params;
      params.precision(15);
      params << "N=" << N << " lambda=" << toString(lambda) << " L=" << L;
      push(params.str(), [=]() -> std::tuple<Cell, Cell, bool> {
        const double e = energy(pseudomomenta(groundFilling(N, lambda, L)));
        const double e0 = groundEnergy(N, lambda, L);
        const bool ok = e0 == 0.0 ? std::abs(e) < 1e-12 : std::abs(e - e0) <= 1e-12 * std::abs(e0);
        return {e, e0, ok};
      });
    }
  } else if (name == "karabali-nair") {
    for (int m : g.m) {
      if (m < 1) continue;
      push(kv({{"m", m}}), [=]() -> std::tuple<Cell, Cell, bool> {
        bool positive = true;
        for (int n = 1; n <= m; ++n) positive = positive && phiKarabaliNair(n, m) > 0;
        const double edge = phiKarabaliNair(m + 1, m);
        return {edge, 0.0, positive && std::abs(edge) < 1e-12};
      });
    }
  } else {
    throw std::invalid_argument("unknown identity '" + name + "'");
  }
}

}  // namespace

ResultTable runVerify(const RunConfig& c) {
  const EnumerationLimits limits{c.cap};
  std::vector<std::string> names;
  VerifyGrids grids;
  if (c.all) {
    names = allIdentities();
    grids = defaultGrids();
  } else {
    if (c.identity.empty()) throw std::invalid_argument("verify needs --all or --identity");
    names = split(c.identity, ',');
    grids = gridsFrom(c);
  }
  std::vector<Check> checks;
  for (const auto& name : names) addChecks(name, grids, limits, checks);

  std::vector<Point> points;
  for (auto& check : checks) {
    points.push_back({{check.name, check.params}, [run = check.run] {
                        auto [value, expected, pass] = run();
                        return single({value, expected, pass}, !pass);
                      }});
  }
  return evaluate({"check", "params", "value", "expected", "pass"}, std::move(points), c.threads);
}

ResultTable run(const RunConfig& config) {
  config.validate();
  if (config.command == "count") return runCount(config);
  if (config.command == "enumerate") return runEnumerate(config);
  if (config.command == "gram") return runGram(config);
  if (config.command == "params") return runParams(config);
  if (config.command == "spectrum") return runSpectrum(config);
  return runVerify(config);
}

// --- output -----------------------------------------------------------------

namespace {

std::string formatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string cellText(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const Integer& v) const { return toString(v); }
    std::string operator()(const Rational& v) const { return toString(v); }
    std::string operator()(double v) const { return formatDouble(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

std::string csvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::json integerJson(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

nlohmann::json cellJson(const Cell& cell) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(const std::string& s) const { return s; }
    nlohmann::json operator()(long long v) const { return v; }
    nlohmann::json operator()(const Integer& v) const { return integerJson(v); }
    nlohmann::json operator()(const Rational& v) const {
      return {{"num", integerJson(boost::multiprecision::numerator(v))},
              {"den", integerJson(boost::multiprecision::denominator(v))}};
    }
    nlohmann::json operator()(double v) const { return v; }
    nlohmann::json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

void writeCsv(const ResultTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << csvEscape(table.header[i]);
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csvEscape(cellText(row[i]));
    out << '\n';
  }
}

void writeJson(const ResultTable& table, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.header.size(); ++i) obj[table.header[i]] = cellJson(row[i]);
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

void write(const ResultTable& table, const std::string& format, std::ostream& out) {
  if (format == "json") writeJson(table, out);
  else writeCsv(table, out);
}

}  // namespace fockstat::cli
