#include "fockstat/counting.hpp"

#include <functional>

namespace fockstat {

namespace {

void requirePositive(int value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Integer lowerBracket(const Rational& x, Bracket bracket) {
  return bracket == Bracket::Floor ? floor(x) : Integer(ceil(x) - 1);
}

Integer countEnumerated(int M, int N, const RestrictionRule& rule, const AlgebraSpec& alg,
                        const EnumerationLimits& limits) {
  requirePositive(M, "M");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  if (N == 0) return 1;
  Integer words = 1;
  for (int i = 0; i < N; ++i) words *= M;
  if (words > limits.cap)
    throw CapacityExceeded("counting " + words.str() + " words (M=" + std::to_string(M) +
                           ", N=" + std::to_string(N) + ") exceeds cap " +
                           std::to_string(limits.cap));
  Integer total = 0;
  forEachMultiset(M, N, [&](const MonomialState& s) {
    total += static_cast<unsigned long long>(sectorDimension(s, alg, rule));
  });
  return total;
}

Integer countHaldaneWu(int M, int N, const Rational& g) {
  requirePositive(M, "M");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  if (N == 0) return 1;
  const Rational shift = Rational(N - 1) * (1 - g);
  if (boost::multiprecision::denominator(shift) != 1)
    throw std::domain_error("Haldane-Wu count needs integral (N-1)(1-g), got " + toString(shift));
  const Integer top = M + boost::multiprecision::numerator(shift);
  return binomial(top.convert_to<long long>(), N);
}

Integer countCS(int M, int N, int p, int q) {
  requirePositive(M, "M");
  requirePositive(N, "N");
  requirePositive(q, "q");
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  const long long span = static_cast<long long>(M) - static_cast<long long>(p) * (N - 1);
  if (span <= 0) return 0;
  const long long alpha = floorDiv(span - 1, q);
  return Integer(span) * binomial(N - 1 + alpha, N - 1) -
         Integer(q) * (N - 1) * binomial(N - 1 + alpha, N);
}

Integer countCSSum(int M, int N, int p, int q, Bracket bracket) {
  requirePositive(M, "M");
  requirePositive(N, "N");
  requirePositive(q, "q");
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  const long long last = static_cast<long long>(M) - static_cast<long long>(N - 1) * p;
  Integer total = 0;
  for (long long i = 1; i <= last; ++i) {
    const Integer top = lowerBracket(Rational(M - i - static_cast<long long>(p) * (N - 1), q),
                                     bracket) + (N - 1);
    total += binomial(top.convert_to<long long>(), N - 1);
  }
  return total;
}

Integer countCSDiagonal(int M, int N, int q) {
  requirePositive(M, "M");
  requirePositive(N, "N");
  requirePositive(q, "q");
  if (static_cast<long long>(M) - static_cast<long long>(q) * (N - 1) <= 0) return 0;
  const long long alpha = floorDiv(M - 1, q) - N + 1;
  return Integer(M) * binomial(N - 1 + alpha, N - 1) -
         Integer(q) * (N - 1) * binomial(N + alpha, N);
}

Integer countCSInterpolation(int M, int N, int p) {
  requirePositive(M, "M");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  return binomial(static_cast<long long>(M) + static_cast<long long>(1 - p) * (N - 1), N);
}

Integer countCSBose(int M, int N, int q) {
  requirePositive(M, "M");
  requirePositive(N, "N");
  requirePositive(q, "q");
  const long long top = N - 1 + floorDiv(M - 1, q);
  return Integer(M) * binomial(top, N - 1) - Integer(q) * (N - 1) * binomial(top, N);
}

namespace {

long long realTop(int M, int N, const Rational& lambda) {
  if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
  requirePositive(M, "M");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  const Integer excluded = ceil(Rational(N - 1) * lambda);
  return static_cast<long long>(M) + N - 1 - excluded.convert_to<long long>();
}

}  // namespace

Integer countReal(int M, int N, const Rational& lambda) {
  return binomial(realTop(M, N, lambda), N);
}

Integer countRealAsPrinted(int M, int N, const Rational& lambda) {
  return binomial(realTop(M, N, lambda), N - 1);
}

Rational lambdaEff(int N, const Rational& lambda) {
  if (N < 2) throw std::domain_error("lambda_eff needs N >= 2");
  if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
  return Rational(ceil(Rational(N - 1) * lambda), N - 1);
}

namespace {

void requireX(const std::vector<int>& X) {
  // Reuse the rule's validation.
  (void)RestrictionRule::xFermi(X);
}

}  // namespace

Integer countXFermi(int M, int N, const std::vector<int>& X) {
  requirePositive(M, "M");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  requireX(X);
  if (N == 0) return 1;
  // chains[pos] = number of k-particle states whose last particle sits at pos.
  std::vector<Integer> chains(static_cast<std::size_t>(M) + 1, Integer(1));
  chains[0] = 0;
  for (int k = 2; k <= N; ++k) {
    std::vector<Integer> next(chains.size(), Integer(0));
    for (int pos = 1; pos <= M; ++pos) {
      for (int x : X) {
        if (pos - x < 1) break;
        next[static_cast<std::size_t>(pos)] += chains[static_cast<std::size_t>(pos - x)];
      }
    }
    chains = std::move(next);
  }
  Integer total = 0;
  for (const auto& c : chains) total += c;
  return total;
}

Integer countXBose(int M, int N, const std::vector<int>& X) {
  requirePositive(M, "M");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  requireX(X);
  if (N == 0) return 1;
  Integer total = 0;
  for (int k = 1; k <= N; ++k) total += binomial(N - 1, k - 1) * countXFermi(M, k, X);
  return total;
}

Integer countGentile(int M, int N, int m) {
  requirePositive(M, "M");
  requirePositive(m, "m");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  if (static_cast<long long>(N) > static_cast<long long>(m) * M) return 0;

  const Integer mFact = factorial(M);
  Integer total = 0;
  // Choose n_m, n_{m-1}, ..., n_1 in turn; n_0 takes the remaining boxes.
  std::function<void(int, int, int, Integer)> recurse = [&](int level, int boxes, int particles,
                                                           Integer denom) {
    if (level == 0) {
      if (particles == 0) total += mFact / (denom * factorial(boxes));
      return;
    }
    for (int n = 0; n <= boxes && n * level <= particles; ++n) {
      recurse(level - 1, boxes - n, particles - n * level, denom * factorial(n));
    }
  };
  recurse(m, M, N, Integer(1));
  return total;
}

Integer countParaRestricted(int M, int N, int p, Statistic kind) {
  requirePositive(M, "M");
  requirePositive(p, "p");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  if (N > p) return 0;
  return kind == Statistic::Fermi ? binomial(M, N) : binomial(M + N - 1, N);
}

bool verifyAverageIdentity(int p, int q, int M, Bracket bracket) {
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  requirePositive(q, "q");
  Integer sum = 0;
  for (int i = 1; i <= q; ++i) {
    sum += lowerBracket(Rational(M - i, q), bracket) - lowerBracket(Rational(M - i - p, q), bracket);
  }
  return sum == p;
}

bool verifyBinomialIdentity(int n, int alpha) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  requirePositive(alpha, "alpha");
  Integer sum = 0;
  for (int i = 0; i < alpha; ++i) sum += binomial(n + i, n);
  const Integer middle = Integer(alpha) * binomial(n + alpha, n) - Integer(n) * binomial(n + alpha, n + 1);
  const Integer right = binomial(n + alpha, n + 1);
  return sum == middle && middle == right;
}

}  // namespace fockstat
