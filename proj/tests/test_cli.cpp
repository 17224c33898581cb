#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fockstat/cli.hpp"
#include "oracles.hpp"

using namespace fockstat;
using namespace fockstat::cli;

namespace {

RunConfig config(const std::string& command, const std::string& family) {
  RunConfig c;
  c.command = command;
  c.family = family;
  c.threads = 2;
  return c;
}

std::string csv(const ResultTable& t) {
  std::ostringstream out;
  writeCsv(t, out);
  return out.str();
}

}  // namespace

TEST_CASE("list parsing") {
  CHECK(parseIntList("3") == std::vector<int>{3});
  CHECK(parseIntList("2..5") == std::vector<int>{2, 3, 4, 5});
  CHECK(parseIntList("1,4..5,9") == std::vector<int>{1, 4, 5, 9});
  CHECK_THROWS(parseIntList("5..2"));
  CHECK_THROWS(parseIntList("a"));
  CHECK_THROWS(parseIntList("1,,2"));
  CHECK(parseRationalList("0,1/2") == std::vector<Rational>{0, Rational(1, 2)});
  CHECK(parseDoubleList("2pi")[0] == doctest::Approx(6.283185307179586));
}

TEST_CASE("config validation") {
  auto c = config("count", "cs");
  CHECK_NOTHROW(c.validate());
  c.cap = 0;
  CHECK_THROWS(c.validate());
  c = config("plot", "cs");
  CHECK_THROWS(c.validate());
  c = config("count", "cs");
  c.M.clear();
  CHECK_THROWS(c.validate());
  c = config("count", "cs");
  c.format = "xml";
  CHECK_THROWS(c.validate());
}

TEST_CASE("count CS grid with oracle") {
  auto c = config("count", "cs");
  c.M = parseIntList("2..6");
  c.N = parseIntList("1..3");
  c.oracle = true;
  const auto t = run(c);
  CHECK_FALSE(t.failed);
  CHECK(t.header == std::vector<std::string>{"M", "N", "p", "q", "value", "oracle", "agrees"});
  REQUIRE(t.rows.size() == 15);
  for (const auto& row : t.rows) {
    const long long M = std::get<long long>(row[0]), N = std::get<long long>(row[1]);
    CHECK(std::get<Integer>(row[4]) == oracle::pascal(M, N));
    CHECK(std::get<bool>(row[6]));
  }
}

TEST_CASE("count rows without oracle omit the comparison columns") {
  auto c = config("count", "gentile");
  c.M = {2};
  c.N = {2};
  c.m = {2};
  const auto t = run(c);
  CHECK(t.header.back() == "value");
  CHECK(csv(t) == "M,N,m,value\n2,2,2,3\n");
}

TEST_CASE("haldane-wu non-integral shift is reported, not thrown") {
  auto c = config("count", "haldane-wu");
  c.M = {5};
  c.N = {2, 3};
  c.g = {Rational(1, 2)};
  CHECK(csv(run(c)) == "M,N,g,value\n5,2,1/2,domain-error\n5,3,1/2,20\n");
}

TEST_CASE("capacity errors name the grid point") {
  auto c = config("count", "cs");
  c.M = {30};
  c.N = {6};
  c.cap = 1000;
  c.oracle = true;
  try {
    run(c);
    FAIL("expected CapacityExceeded");
  } catch (const CapacityExceeded& e) {
    CHECK(std::string(e.what()).find("M=30, N=6") != std::string::npos);
  }
}

TEST_CASE("params, gram and spectrum") {
  auto c = config("params", "cs-finite");
  c.M = {10, 11};
  c.N = {2};
  c.p = {1};
  c.q = {2};
  auto t = run(c);
  REQUIRE(t.rows.size() == 2);
  CHECK(std::get<Rational>(t.rows[0].back()) == 1);
  CHECK(std::get<Rational>(t.rows[1].back()) == 0);

  c.oracle = true;
  CHECK(run(c).failed);
  c.bracket = "strict";
  CHECK_FALSE(run(c).failed);

  auto g = config("gram", "");
  g.indices = {1, 2};
  g.algebra = "quon:1/2";
  CHECK(csv(run(g)) == "multiset,algebra,rule,dimension,rank\n1 2,quon:1/2,none,2,2\n");

  auto s = config("spectrum", "");
  s.N = {2};
  s.lambda = {1};
  s.L = parseDoubleList("2pi");
  s.oracle = true;
  t = run(s);
  CHECK_FALSE(t.failed);
  CHECK(std::get<double>(t.rows[0][6]) == doctest::Approx(0.5));
}

TEST_CASE("verify identities") {
  auto c = config("verify", "");
  c.identity = "binom";
  c.n = parseIntList("0..3");
  c.alpha = parseIntList("1..5");
  auto t = run(c);
  CHECK(t.rows.size() == 20);
  CHECK_FALSE(t.failed);

  c.identity = "avgG";
  c.p = parseIntList("0..3");
  c.q = parseIntList("1..3");
  c.M = parseIntList("1..30");
  t = run(c);
  CHECK(t.rows.size() == 24);
  CHECK_FALSE(t.failed);

  c.identity = "nonsense";
  CHECK_THROWS(run(c));
}

TEST_CASE("output is deterministic across thread counts") {
  auto c = config("count", "x-bose");
  c.M = parseIntList("1..6");
  c.N = parseIntList("1..3");
  c.X = {1, 3};
  c.oracle = true;
  c.threads = 1;
  const auto one = csv(run(c));
  c.threads = 4;
  CHECK(csv(run(c)) == one);
}

TEST_CASE("json output keeps rationals exact") {
  auto c = config("params", "cs-haldane");
  c.p = {1};
  c.q = {2};
  c.n = {2};
  std::ostringstream out;
  writeJson(run(c), out);
  CHECK(out.str().find("\"num\": 5") != std::string::npos);
  CHECK(out.str().find("\"den\": 2") != std::string::npos);
}
