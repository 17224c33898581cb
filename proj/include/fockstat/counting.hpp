#pragma once

// State-counting functions D(M, N): the definitional sum of sector
// dimensions and the closed forms it is compared against.

#include <optional>
#include <string>
#include <vector>

#include "fockstat/gram.hpp"

namespace fockstat {

enum class Statistic { Fermi, Bose };

/// Lower integer bracket. Floor is floor(x); Strict is the largest integer
/// strictly below x, i.e. ceil(x) - 1.
enum class Bracket { Floor, Strict };

Integer lowerBracket(const Rational& x, Bracket bracket);

struct CountResult {
  Integer value;
  std::string formula;
  std::optional<bool> matchesOracle;
};

/// D(M, N) = sum over index multisets of the sector dimension. N = 0 gives 1.
/// Throws CapacityExceeded when M^N exceeds the cap.
Integer countEnumerated(int M, int N, const RestrictionRule& rule, const AlgebraSpec& alg,
                        const EnumerationLimits& limits = {});

/// C(M + (N-1)(1-g), N). Throws std::domain_error unless (N-1)(1-g) is an
/// integer.
Integer countHaldaneWu(int M, int N, const Rational& g);

/// Closed form (M - p(N-1)) C(N-1+a, N-1) - q(N-1) C(N-1+a, N) with
/// a = floor((M-1-p(N-1))/q); zero when the closest packing does not fit.
Integer countCS(int M, int N, int p, int q);

/// The same count written as a sum over the position of the first particle.
Integer countCSSum(int M, int N, int p, int q, Bracket bracket = Bracket::Floor);

/// p = q specialisation: M C(N-1+a, N-1) - q(N-1) C(N+a, N),
/// a = floor((M-1)/q) - N + 1.
Integer countCSDiagonal(int M, int N, int q);

/// q = 1 specialisation: C(M + (1-p)(N-1), N).
Integer countCSInterpolation(int M, int N, int p);

/// p = 0 generalised Bose count.
Integer countCSBose(int M, int N, int q);

/// C(M + N - 1 - ceil((N-1) lambda), N) for real lambda >= 0.
Integer countReal(int M, int N, const Rational& lambda);

/// Same top index with the printed bottom index N - 1. Diagnostics only; it
/// does not reduce to the integer-lambda count.
Integer countRealAsPrinted(int M, int N, const Rational& lambda);

/// ceil((N-1) lambda) / (N-1). Throws std::domain_error for N < 2.
Rational lambdaEff(int N, const Rational& lambda);

/// X-restricted Fermi count by dynamic programming over gap chains.
Integer countXFermi(int M, int N, const std::vector<int>& X);

/// X-restricted Bose count as the convolution sum_k C(N-1, k-1) D(M, k; X, F).
Integer countXBose(int M, int N, const std::vector<int>& X);

/// Sum over occupation patterns (n_0..n_m), sum n = M, sum a n_a = N, of
/// M! / (n_0! ... n_m!).
Integer countGentile(int M, int N, int m);

/// Fermi or Bose count for N <= p, zero beyond.
Integer countParaRestricted(int M, int N, int p, Statistic kind);

/// sum_{i=1}^{q} [(M-i)/q] - [(M-i-p)/q] == p.
bool verifyAverageIdentity(int p, int q, int M, Bracket bracket = Bracket::Floor);

/// sum_{i=0}^{a-1} C(n+i, n) == a C(n+a, n) - n C(n+a, n+1) == C(n+a, n+1).
bool verifyBinomialIdentity(int n, int alpha);

}  // namespace fockstat
