#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the exact number types.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "fockstat/core.hpp"

namespace oracle {

using fockstat::Integer;
using fockstat::Rational;
using Word = std::vector<int>;

inline Integer pascal(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<Integer> row{1};
  for (long long i = 1; i <= n; ++i) {
    std::vector<Integer> next(static_cast<std::size_t>(i + 1), 1);
    for (long long j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// Visits every word of length N over {1..M}.
inline void forEachWord(int M, int N, const std::function<void(const Word&)>& visit) {
  Word w(static_cast<std::size_t>(N), 1);
  while (true) {
    visit(w);
    int i = N - 1;
    while (i >= 0 && w[i] == M) w[i--] = 1;
    if (i < 0) return;
    ++w[i];
  }
}

using PairRule = std::function<bool(int, int)>;

inline bool neighbours(const Word& w, const PairRule& ok) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!ok(w[i - 1], w[i])) return false;
  return true;
}

inline PairRule csPair(int p, int q) {
  return [=](int j, int k) {
    for (int gap = p; gap <= k - j; gap += q) {
      if (gap == k - j) return true;
      if (q == 0) break;
    }
    return false;
  };
}

inline PairRule xPair(std::vector<int> X, bool bose) {
  return [=](int j, int k) {
    if (bose && j == k) return true;
    return std::find(X.begin(), X.end(), k - j) != X.end();
  };
}

inline Integer countWords(int M, int N, const std::function<bool(const Word&)>& allowed) {
  Integer total = 0;
  forEachWord(M, N, [&](const Word& w) {
    if (allowed(w)) ++total;
  });
  return total;
}

inline Word sorted(Word w) {
  std::sort(w.begin(), w.end());
  return w;
}

inline int maxMultiplicity(const Word& w) {
  int best = 0;
  for (int v : w) best = std::max<int>(best, static_cast<int>(std::count(w.begin(), w.end(), v)));
  return best;
}

// Number of multisets of size N on M sites satisfying `allowed` on the
// sorted representative.
inline Integer countMultisets(int M, int N, const std::function<bool(const Word&)>& allowed) {
  Integer total = 0;
  forEachWord(M, N, [&](const Word& w) {
    if (std::is_sorted(w.begin(), w.end()) && allowed(w)) ++total;
  });
  return total;
}

inline int inversions(const std::vector<int>& perm) {
  int n = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++n;
  return n;
}

// <bra|ket> for the quon relation: sum over bijections pairing equal labels
// weighted by q^inversions. q = 1 gives the permanent, q = -1 the
// determinant of the label-equality matrix.
inline Rational quonInner(const Word& bra, const Word& ket, const Rational& q) {
  if (bra.size() != ket.size()) return 0;
  std::vector<int> perm(bra.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    bool match = true;
    for (std::size_t i = 0; i < perm.size() && match; ++i) match = bra[i] == ket[perm[i]];
    if (!match) continue;
    Rational term = 1;
    for (int i = 0; i < inversions(perm); ++i) term *= q;
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Plain Gaussian elimination over the rationals.
inline std::size_t rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<Word> orderings(Word w) {
  std::sort(w.begin(), w.end());
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Rank of the Gram matrix of the allowed orderings of a multiset.
inline std::size_t sectorRank(const Word& multiset, const Rational& q,
                              const std::function<bool(const Word&)>& allowed) {
  std::vector<Word> words;
  for (auto& w : orderings(multiset))
    if (allowed(w)) words.push_back(w);
  std::vector<std::vector<Rational>> g(words.size(), std::vector<Rational>(words.size()));
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) g[i][j] = quonInner(words[i], words[j], q);
  return rank(g);
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace oracle
