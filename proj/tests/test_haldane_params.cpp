#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockstat/gram.hpp"
#include "fockstat/haldane_params.hpp"

using namespace fockstat;

TEST_CASE("finite-lattice CS parameter") {
  for (int M = 3; M <= 9; ++M)
    for (int i1 = 1; i1 <= 2; ++i1)
      for (int N = 1; i1 + N <= M; ++N) CHECK(gCSFinite(M, i1, N, 1, 1, Side::Right) == 1);
  CHECK(gCSFinite(10, 1, 2, 1, 2, Side::Right) == 1);
  CHECK(gCSFinite(11, 1, 2, 1, 2, Side::Right) == 0);
  CHECK_THROWS_AS(gCSFinite(4, 3, 3, 1, 2, Side::Right), std::domain_error);
}

TEST_CASE("strict bracket reproduces the Gram-rank parameter") {
  CHECK(gCSDefinitional(10, 1, 2, 1, 2, Side::Right) == 0);
  CHECK(gCSDefinitional(11, 1, 2, 1, 2, Side::Right) == 1);
  CHECK(gCSFinite(10, 1, 2, 1, 2, Side::Right, Bracket::Strict) == 0);
  CHECK(gCSFinite(11, 1, 2, 1, 2, Side::Right, Bracket::Strict) == 1);
  const auto report = reportCSFinite(10, 1, 2, 1, 2, Side::Right, Bracket::Floor);
  REQUIRE(report.agrees.has_value());
  CHECK_FALSE(*report.agrees);
}

TEST_CASE("one-particle dimension closed form") {
  for (int M = 4; M <= 10; ++M)
    for (int p = 1; p <= 2; ++p)
      for (int q = 1; q <= 3; ++q)
        for (int i1 = p; i1 + 2 * p - 1 <= M; ++i1) {
          const auto block = closestPackedBlock(M, i1, 2, p);
          const auto d = oneParticleDimension(block, buildLattice(M), AlgebraSpec::quon(0), RestrictionRule::cs(p, q));
          CHECK(oneParticleDimensionCS(M, i1, 2, p, q, Bracket::Strict, StepAtZero::One) == Integer(d));
        }
}

TEST_CASE("average and Haldane parameters") {
  CHECK(gAverageCS(1, 2, 20, 3, 1) == Rational(1, 2));
  CHECK(gAverageCS(3, 1, 20, 3, 1) == 3);
  CHECK(gAverageCS(0, 3, 20, 3, 1) == 0);
  CHECK_THROWS_AS(gAverageCS(2, 2, 3, 3, 1), std::domain_error);
  CHECK(gHaldaneCS(1, 3, 0) == Rational(1, 3));
  for (int p = 1; p <= 4; ++p) CHECK(gHaldaneCS(p, p, 0) == 1);
  CHECK(gHaldaneCS(1, 2, 2) == Rational(5, 2));
}

TEST_CASE("Gentile parameters") {
  CHECK(gGentile({1, 1, 1}, 3, 1) == 1);
  CHECK(gGentile({1, 1, 1}, 3, 0) == 0);
  CHECK(gGentile({0, 1, 1, 1}, 3, 1) == 0);
  CHECK(gGentileAverage({1, 1, 1}, 3) == Rational(1, 2));
  CHECK(gGentileAverageDefinitional({1, 1, 1}, 3) == Rational(1, 2));
  CHECK_THROWS_AS(gGentileAverage({1, 1}, 3), std::invalid_argument);
  CHECK(gSingleGentile(0, 3) == 0);
  CHECK(gSingleGentile(2, 3) == 1);
  CHECK(gSingleGentileAverage(4) == Rational(1, 4));
  CHECK_THROWS_AS(gSingleGentile(3, 3), std::domain_error);
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; n < m; ++n) CHECK(gSingleGentile(n, m) == gSingleGentileDefinitional(n, m));
}

TEST_CASE("restricted para parameters") {
  CHECK(gParaRestricted(6, 1, 1, 3, Statistic::Fermi) == 1);
  CHECK(gParaRestricted(6, 1, 1, 3, Statistic::Bose) == 0);
  CHECK(gParaRestricted(5, 1, 2, 2, Statistic::Fermi) == Rational(5, 2));
  CHECK_THROWS_AS(gParaRestricted(5, 2, 2, 2, Statistic::Fermi), std::domain_error);
  for (int M = 2; M <= 5; ++M)
    for (int p = 1; p <= 3; ++p)
      for (int n = 1; n <= p; ++n)
        for (int k = 1; n + k <= p + 1 && n + k - 1 <= M; ++k)
          for (auto kind : {Statistic::Fermi, Statistic::Bose})
            CHECK(gParaRestricted(M, n, k, p, kind) == gParaDefinitional(M, n, k, p, kind));
}
