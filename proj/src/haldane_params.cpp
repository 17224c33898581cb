#include "fockstat/haldane_params.hpp"

#include <numeric>

namespace fockstat {

GReport makeReport(std::optional<Rational> closedForm, Rational definitional,
                   std::map<std::string, std::string> context) {
  GReport r;
  r.gClosedForm = std::move(closedForm);
  r.gDefinitional = std::move(definitional);
  if (r.gClosedForm) r.agrees = (*r.gClosedForm == r.gDefinitional);
  r.context = std::move(context);
  return r;
}

MonomialState closestPackedBlock(int M, int i1, int N, int p) {
  if (N < 1) throw std::invalid_argument("block needs N >= 1");
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  if (i1 < 1 || static_cast<long long>(i1) + static_cast<long long>(N - 1) * p > M)
    throw std::domain_error("closest-packed state does not fit on the lattice");
  MonomialState block;
  for (int a = 0; a < N; ++a) block.push_back(i1 + a * p);
  return block;
}

namespace {

Integer step(long long x, StepAtZero atZero) {
  if (x > 0) return 1;
  if (x == 0) return atZero == StepAtZero::One ? 1 : 0;
  return 0;
}

void requireQ(int q) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
}

}  // namespace

Integer oneParticleDimensionCS(int M, int i1, int N, int p, int q, Bracket bracket,
                               StepAtZero atZero) {
  requireQ(q);
  (void)closestPackedBlock(M, i1, N, p);
  const long long left = static_cast<long long>(i1) - p;
  const long long right = static_cast<long long>(M) - i1 - static_cast<long long>(N) * p + 1;
  return step(left, atZero) + lowerBracket(Rational(left, q), bracket) + step(right, atZero) +
         lowerBracket(Rational(right, q), bracket);
}

Rational gCSFinite(int M, int i1, int N, int p, int q, Side side, Bracket bracket) {
  requireQ(q);
  (void)closestPackedBlock(M, i1, N, p);
  if (side == Side::Right) {
    const long long base = static_cast<long long>(M) - i1 + 1;
    return Rational(lowerBracket(Rational(base - static_cast<long long>(N) * p, q), bracket) -
                    lowerBracket(Rational(base - static_cast<long long>(N + 1) * p, q), bracket));
  }
  return Rational(lowerBracket(Rational(i1 - p, q), bracket) -
                  lowerBracket(Rational(i1 - 2LL * p, q), bracket));
}

Rational gCSDefinitional(int M, int i1, int N, int p, int q, Side side) {
  const MonomialState block = closestPackedBlock(M, i1, N, p);
  const long long added = side == Side::Right ? static_cast<long long>(i1) + static_cast<long long>(N) * p
                                              : static_cast<long long>(i1) - p;
  if (added < 1 || added > M)
    throw std::domain_error("no room to add a particle on the requested side");
  return extendedG(block, {static_cast<Site>(added)}, buildLattice(M), AlgebraSpec::quon(0),
                   RestrictionRule::cs(p, q));
}

GReport reportCSFinite(int M, int i1, int N, int p, int q, Side side, Bracket bracket) {
  std::map<std::string, std::string> ctx{
      {"M", std::to_string(M)},   {"i1", std::to_string(i1)}, {"N", std::to_string(N)},
      {"p", std::to_string(p)},   {"q", std::to_string(q)},
      {"side", side == Side::Right ? "right" : "left"},
      {"bracket", bracket == Bracket::Floor ? "floor" : "strict"}};
  return makeReport(gCSFinite(M, i1, N, p, q, side, bracket),
                    gCSDefinitional(M, i1, N, p, q, side), std::move(ctx));
}

Rational gAverageCS(int p, int q, int M0, int N, int i1, Bracket bracket) {
  requireQ(q);
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  if (static_cast<long long>(M0) < static_cast<long long>(N) * p + q + i1)
    throw std::domain_error("averaging window needs M0 >= Np + q + i1");
  Rational sum = 0;
  for (int a = 0; a < q; ++a) sum += gCSFinite(M0 + a, i1, N, p, q, Side::Right, bracket);
  return sum / q;
}

Rational gHaldaneCS(int p, int q, int nN) {
  requireQ(q);
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  if (nN < 0) throw std::invalid_argument("n_N must be >= 0");
  return Rational(p, q) + nN;
}

namespace {

int requirePattern(const std::vector<int>& pattern, int M) {
  if (pattern.size() < 2) throw std::invalid_argument("pattern needs entries n_0..n_m with m >= 1");
  for (int n : pattern) {
    if (n < 0) throw std::invalid_argument("pattern entries must be >= 0");
  }
  if (std::accumulate(pattern.begin(), pattern.end(), 0) != M)
    throw std::invalid_argument("pattern entries must sum to M");
  return static_cast<int>(pattern.size()) - 1;
}

// Oscillators are filled in pattern order: the first n_0 sites hold 0, the
// next n_1 hold 1, and so on.
std::vector<int> fillsFromPattern(const std::vector<int>& pattern) {
  std::vector<int> fills;
  for (std::size_t a = 0; a < pattern.size(); ++a) fills.insert(fills.end(), pattern[a], static_cast<int>(a));
  return fills;
}

}  // namespace

int gGentile(const std::vector<int>& pattern, int M, int targetFill) {
  const int m = requirePattern(pattern, M);
  if (targetFill < 0 || targetFill >= m)
    throw std::invalid_argument("target oscillator must hold fewer than m particles");
  if (pattern[static_cast<std::size_t>(targetFill)] == 0)
    throw std::invalid_argument("no oscillator holds the target filling");
  return targetFill == m - 1 ? 1 : 0;
}

Rational gGentileAverage(const std::vector<int>& pattern, int M) {
  const int m = requirePattern(pattern, M);
  const int open = M - pattern[static_cast<std::size_t>(m)];
  if (open == 0) throw std::domain_error("every oscillator is full");
  return Rational(pattern[static_cast<std::size_t>(m - 1)], open);
}

Rational gGentileAverageDefinitional(const std::vector<int>& pattern, int M) {
  const int m = requirePattern(pattern, M);
  const auto fills = fillsFromPattern(pattern);
  MonomialState fixed;
  for (std::size_t s = 0; s < fills.size(); ++s) fixed.insert(fixed.end(), fills[s], static_cast<Site>(s + 1));

  const auto lattice = buildLattice(M);
  const auto rule = RestrictionRule::gentile(m);
  Rational sum = 0;
  int open = 0;
  for (std::size_t s = 0; s < fills.size(); ++s) {
    if (fills[s] >= m) continue;
    ++open;
    sum += extendedG(fixed, {static_cast<Site>(s + 1)}, lattice, AlgebraSpec::bose(), rule);
  }
  if (open == 0) throw std::domain_error("every oscillator is full");
  return sum / open;
}

Rational gSingleGentile(int n, int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (n >= m) throw std::domain_error("single oscillator already holds m particles");
  return n + 1 == m ? 1 : 0;
}

Rational gSingleGentileAverage(int m) {
  Rational sum = 0;
  for (int n = 0; n < m; ++n) sum += gSingleGentile(n, m);
  return sum / m;
}

Rational gSingleGentileDefinitional(int n, int m) {
  (void)gSingleGentile(n, m);
  const MonomialState fixed(static_cast<std::size_t>(n), 1);
  return extendedG(fixed, {1}, buildLattice(1), AlgebraSpec::bose(), RestrictionRule::gentile(m));
}

Rational gParaRestricted(int M, int n, int k, int p, Statistic kind) {
  if (M < 1 || n < 1 || k < 1 || p < 1)
    throw std::invalid_argument("gParaRestricted needs M, n, k, p >= 1");
  if (n + k > p + 1) throw std::domain_error("only defined up to n + k = p + 1");
  if (n + k <= p) return kind == Statistic::Fermi ? 1 : 0;
  return kind == Statistic::Fermi ? Rational(M - n + 1, p - n + 1) : Rational(M, p - n + 1);
}

Rational gParaDefinitional(int M, int n, int k, int p, Statistic kind) {
  if (M < 1 || n < 1 || k < 1 || p < 1)
    throw std::invalid_argument("gParaDefinitional needs M, n, k, p >= 1");
  if (n + k - 1 > M) throw std::domain_error("not enough sites for distinct indices");
  MonomialState fixed, added;
  for (int s = 1; s < n; ++s) fixed.push_back(s);
  for (int s = n; s < n + k; ++s) added.push_back(s);
  const auto alg = kind == Statistic::Fermi ? AlgebraSpec::fermi() : AlgebraSpec::bose();
  return extendedG(fixed, added, buildLattice(M), alg, RestrictionRule::totalCap(p));
}

}  // namespace fockstat
