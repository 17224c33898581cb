#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockstat/counting.hpp"
#include "oracles.hpp"

using namespace fockstat;

TEST_CASE("enumerated counts") {
  CHECK(countEnumerated(4, 2, RestrictionRule::none(), AlgebraSpec::bose()) == 10);
  CHECK(countEnumerated(4, 2, RestrictionRule::none(), AlgebraSpec::fermi()) == 6);
  CHECK(countEnumerated(6, 2, RestrictionRule::cs(1, 2), AlgebraSpec::quon(0)) == 9);
  CHECK(countEnumerated(3, 0, RestrictionRule::cs(1, 2), AlgebraSpec::quon(0)) == 1);
  CHECK_THROWS_AS(countEnumerated(20, 6, RestrictionRule::none(), AlgebraSpec::bose(), EnumerationLimits{1000}),
                  CapacityExceeded);
}

TEST_CASE("Haldane-Wu interpolation") {
  CHECK(countHaldaneWu(4, 2, 0) == 10);
  CHECK(countHaldaneWu(4, 2, 1) == 6);
  CHECK(countHaldaneWu(5, 3, Rational(1, 2)) == 20);
  CHECK(countHaldaneWu(5, 3, 2) == 1);
  CHECK(countHaldaneWu(7, 0, Rational(1, 3)) == 1);
  CHECK_THROWS_AS(countHaldaneWu(5, 2, Rational(1, 2)), std::domain_error);
}

TEST_CASE("CS counting") {
  CHECK(countCS(4, 2, 1, 1) == 6);
  CHECK(countCS(6, 2, 1, 2) == 9);
  CHECK(countCS(6, 3, 2, 1) == 4);
  CHECK(countCSBose(4, 2, 1) == 10);
  CHECK(countCSBose(5, 2, 2) == 9);
  for (int M = 1; M <= 6; ++M)
    for (int q = 1; q <= 3; ++q) CHECK(countCSBose(M, 1, q) == M);
  CHECK(countCSSum(6, 2, 1, 2) == 9);
  CHECK(countCSInterpolation(6, 3, 2) == 4);
}

TEST_CASE("CS closed form against the word oracle") {
  for (int M = 1; M <= 7; ++M)
    for (int N = 1; N <= 3; ++N)
      for (int p = 0; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
          const auto ok = oracle::csPair(p, q);
          const Integer words = oracle::countWords(M, N, [&](const oracle::Word& w) { return oracle::neighbours(w, ok); });
          CHECK(countCS(M, N, p, q) == words);
          CHECK(countCSSum(M, N, p, q) == words);
          if (p == q) CHECK(countCSDiagonal(M, N, q) == words);
          if (p == 0) CHECK(countCSBose(M, N, q) == words);
        }
}

TEST_CASE("real coupling") {
  CHECK(countReal(5, 3, 0) == oracle::pascal(7, 3));
  CHECK(countReal(6, 3, 2) == 4);
  CHECK(countReal(4, 3, Rational(1, 2)) == 10);
  CHECK(countRealAsPrinted(4, 3, Rational(1, 2)) == oracle::pascal(5, 2));
  CHECK(lambdaEff(5, 3) == 3);
  CHECK(lambdaEff(3, Rational(1, 2)) == Rational(1, 2));
  CHECK(lambdaEff(4, Rational(1, 2)) == Rational(2, 3));
  CHECK_THROWS_AS(lambdaEff(1, 1), std::domain_error);
}

TEST_CASE("X-restricted counting") {
  for (int M = 1; M <= 7; ++M) {
    CHECK(countXFermi(M, 1, {2, 5}) == M);
    CHECK(countXBose(M, 1, {2, 5}) == M);
    std::vector<int> all;
    for (int x = 1; x <= M; ++x) all.push_back(x);
    for (int N = 0; N <= 4; ++N) {
      CHECK(countXFermi(M, N, all) == oracle::pascal(M, N));
      CHECK(countXBose(M, N, all) == oracle::pascal(M + N - 1, N));
    }
  }
  for (const std::vector<int>& X : std::vector<std::vector<int>>{{1}, {2}, {1, 3}, {2, 3, 4}}) {
    for (int M = 1; M <= 6; ++M)
      for (int N = 1; N <= 4; ++N) {
        CHECK(countXFermi(M, N, X) ==
              oracle::countWords(M, N, [&](const oracle::Word& w) { return oracle::neighbours(w, oracle::xPair(X, false)); }));
        CHECK(countXBose(M, N, X) ==
              oracle::countWords(M, N, [&](const oracle::Word& w) { return oracle::neighbours(w, oracle::xPair(X, true)); }));
      }
  }
}

TEST_CASE("Gentile and restricted para counting") {
  CHECK(countGentile(2, 2, 2) == 3);
  for (int M = 1; M <= 5; ++M)
    for (int N = 0; N <= 5; ++N)
      for (int m = 1; m <= 5; ++m) {
        CHECK(countGentile(M, N, m) ==
              oracle::countMultisets(M, N, [&](const oracle::Word& w) { return oracle::maxMultiplicity(w) <= m; }));
      }
  for (int M = 1; M <= 6; ++M)
    for (int p = 1; p <= 4; ++p)
      for (int N = 0; N <= 6; ++N) {
        CHECK(countParaRestricted(M, N, p, Statistic::Fermi) == (N <= p ? oracle::pascal(M, N) : Integer(0)));
        CHECK(countParaRestricted(M, N, p, Statistic::Bose) ==
              (N <= p ? oracle::pascal(M + N - 1, N) : Integer(0)));
      }
}

TEST_CASE("identities") {
  CHECK(verifyAverageIdentity(3, 2, 20));
  CHECK(verifyBinomialIdentity(2, 4));
  for (int q = 1; q <= 4; ++q) CHECK(verifyAverageIdentity(0, q, 9));
  CHECK(lowerBracket(Rational(3), Bracket::Floor) == 3);
  CHECK(lowerBracket(Rational(3), Bracket::Strict) == 2);
  CHECK(lowerBracket(Rational(7, 2), Bracket::Strict) == 3);
}
