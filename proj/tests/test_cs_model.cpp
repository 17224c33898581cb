#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fockstat/cs_model.hpp"

using namespace fockstat;

namespace {
const double twoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("pseudomomenta") {
  CHECK(pseudomomenta(groundFilling(1, 1, twoPi)) == std::vector<double>{0.0});
  const auto ks = pseudomomenta(groundFilling(2, 1, twoPi));
  CHECK(ks[0] == doctest::Approx(-0.5));
  CHECK(ks[1] == doctest::Approx(0.5));
  const auto excited = pseudomomenta(Filling{{0, 1}, 1, twoPi});
  CHECK(excited[0] == doctest::Approx(-0.5));
  CHECK(excited[1] == doctest::Approx(1.5));
  const auto literal = pseudomomenta(groundFilling(2, 1, twoPi), MomentumAnchor::Literal);
  CHECK(literal[0] == doctest::Approx(0.5));
  CHECK_THROWS_AS(pseudomomenta(Filling{{0, -1}, 1, twoPi}), std::invalid_argument);
}

TEST_CASE("energies") {
  CHECK(energy({}) == 0.0);
  CHECK(energy({-0.5, 0.5}) == 0.5);
  CHECK(energy({1, 2, 3}) == 14.0);
  CHECK(groundEnergy(1, 3, 1.0) == 0.0);
  CHECK(groundEnergy(2, 1, twoPi) == doctest::Approx(0.5));
  CHECK(groundEnergy(5, 0, 2.0) == 0.0);
}

TEST_CASE("blocked oscillators") {
  for (int N = 1; N <= 6; ++N) CHECK(blockedOscillators(N, 1, 1, std::vector<int>(N - 1, 0)) == N);
  CHECK(blockedOscillators(3, 2, 1, {0, 0}) == 7);
  CHECK(blockedOscillators(2, 2, 2, {1}) == 6);
  CHECK(blockedOscillators(2, 1, 3, {4}) == 2);
  CHECK(blockedOscillators(2, 2, 3, {1}) == 8);
  CHECK_THROWS_AS(blockedOscillators(3, 1, 1, {0}), std::invalid_argument);
}

TEST_CASE("single-oscillator structure functions") {
  CHECK(truncatedBoseStructure(1, 3) == 2);
  CHECK(truncatedBoseStructure(3, 3) == 0);
  CHECK(truncatedBoseStructure(0, 3) == 1);
  CHECK_THROWS_AS(truncatedBoseStructure(4, 3), std::domain_error);
  CHECK(phiKarabaliNair(1, 4) == doctest::Approx(1.0));
  CHECK(std::abs(phiKarabaliNair(5, 4)) < 1e-12);
  CHECK(phiKarabaliNair(0, 4) == 0.0);
}
