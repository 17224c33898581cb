#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fockstat/cli.hpp"

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitError = 2;
constexpr int kExitCapacity = 3;

struct RawFlags {
  std::string M, N, p, q, m, n, k, alpha, lambda, g, L, X, indices, pattern, gaps;
};

void addGridFlags(CLI::App& sub, RawFlags& raw, fockstat::cli::RunConfig& c) {
  sub.add_option("--family", c.family, "family or restriction rule");
  sub.add_option("--M", raw.M, "lattice sizes, e.g. 4 or 2..10 or 3,5");
  sub.add_option("--N", raw.N, "particle numbers");
  sub.add_option("--p", raw.p, "rule parameter p");
  sub.add_option("--q", raw.q, "rule parameter q");
  sub.add_option("--m", raw.m, "Gentile maximal occupancy");
  sub.add_option("--n", raw.n, "occupation / gap quanta");
  sub.add_option("--k", raw.k, "number of added particles");
  sub.add_option("--alpha", raw.alpha, "binomial identity alpha");
  sub.add_option("--lambda", raw.lambda, "coupling values (rationals)");
  sub.add_option("--g", raw.g, "statistical parameter values (rationals)");
  sub.add_option("--L", raw.L, "ring lengths (2pi allowed)");
  sub.add_option("--x-set", raw.X, "allowed gap set, e.g. 1,3");
  sub.add_option("--indices", raw.indices, "mode multiset for gram, e.g. 1,1,2");
  sub.add_option("--pattern", raw.pattern, "Gentile occupation pattern n0,n1,..,nm");
  sub.add_option("--gaps", raw.gaps, "pseudomomentum quanta n1,..,nN");
  sub.add_option("--i1", c.i1, "first site of the closest-packed block");
  sub.add_option("--M0", c.M0, "first lattice size of the average");
  sub.add_option("--side", c.side, "left | right")->check(CLI::IsMember({"left", "right"}));
  sub.add_option("--bracket", c.bracket, "floor | strict")->check(CLI::IsMember({"floor", "strict"}));
  sub.add_option("--step-at-zero", c.stepAtZero, "one | zero")->check(CLI::IsMember({"one", "zero"}));
  sub.add_option("--anchor", c.anchor, "symmetric | literal")->check(CLI::IsMember({"symmetric", "literal"}));
  sub.add_option("--algebra", c.algebra, "bose | fermi | quon:<q>");
  sub.add_flag("--oracle", c.oracle, "compare against brute-force enumeration");
  sub.add_option("--cap", c.cap, "enumeration capacity");
  sub.add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--out", c.out, "output file (default stdout)");
  sub.add_option("--threads", c.threads, "worker threads (0 = hardware)");
}

void applyRaw(const RawFlags& raw, fockstat::cli::RunConfig& c) {
  using namespace fockstat::cli;
  if (!raw.M.empty()) c.M = parseIntList(raw.M);
  if (!raw.N.empty()) c.N = parseIntList(raw.N);
  if (!raw.p.empty()) c.p = parseIntList(raw.p);
  if (!raw.q.empty()) c.q = parseIntList(raw.q);
  if (!raw.m.empty()) c.m = parseIntList(raw.m);
  if (!raw.n.empty()) c.n = parseIntList(raw.n);
  if (!raw.k.empty()) c.k = parseIntList(raw.k);
  if (!raw.alpha.empty()) c.alpha = parseIntList(raw.alpha);
  if (!raw.lambda.empty()) c.lambda = parseRationalList(raw.lambda);
  if (!raw.g.empty()) c.g = parseRationalList(raw.g);
  if (!raw.L.empty()) c.L = parseDoubleList(raw.L);
  if (!raw.X.empty()) c.X = parseIntList(raw.X);
  if (!raw.indices.empty()) c.indices = parseIntList(raw.indices);
  if (!raw.pattern.empty()) c.pattern = parseIntList(raw.pattern);
  if (!raw.gaps.empty()) c.gaps = parseIntList(raw.gaps);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact state counting for restricted Fock spaces"};
  app.set_config("--config", "", "TOML/INI file with default flag values");
  app.require_subcommand(1);

  fockstat::cli::RunConfig config;
  RawFlags raw;
  for (const char* name : {"count", "enumerate", "gram", "params", "spectrum", "verify"}) {
    auto* sub = app.add_subcommand(name);
    addGridFlags(*sub, raw, config);
    if (std::string(name) == "verify") {
      sub->add_flag("--all", config.all, "run every identity on built-in grids");
      sub->add_option("--identity", config.identity, "comma separated identity names");
    }
    sub->callback([&config, name] { config.command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    applyRaw(raw, config);
    const auto table = fockstat::cli::run(config);
    if (config.out.empty()) {
      fockstat::cli::write(table, config.format, std::cout);
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + config.out);
      fockstat::cli::write(table, config.format, file);
    }
    return table.failed ? kExitFailedCheck : 0;
  } catch (const fockstat::CapacityExceeded& e) {
    std::cerr << "capacity exceeded: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
