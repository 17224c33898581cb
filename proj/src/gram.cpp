#include "fockstat/gram.hpp"

#include <algorithm>

namespace fockstat {

namespace {

void requireNonEmpty(const MonomialState& indices) {
  if (indices.empty()) throw std::invalid_argument("gram: empty multiset");
}

std::vector<MonomialState> allowedOrderings(const MonomialState& indices,
                                            const RestrictionRule& rule) {
  std::vector<MonomialState> out;
  for (auto& w : distinctOrderings(indices)) {
    if (isAllowed(w, rule)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::vector<MonomialState> distinctOrderings(MonomialState indices) {
  std::sort(indices.begin(), indices.end());
  std::vector<MonomialState> out;
  do {
    out.push_back(indices);
  } while (std::next_permutation(indices.begin(), indices.end()));
  return out;
}

GramMatrix gramMatrix(const MonomialState& indices, const AlgebraSpec& alg,
                      const RestrictionRule& rule) {
  requireNonEmpty(indices);
  GramMatrix g;
  g.orderings = distinctOrderings(indices);
  const std::size_t n = g.orderings.size();
  std::vector<bool> allowed(n);
  for (std::size_t i = 0; i < n; ++i) allowed[i] = isAllowed(g.orderings[i], rule);

  g.entries.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (!allowed[i]) continue;
    for (std::size_t j = i; j < n; ++j) {
      if (!allowed[j]) continue;
      Rational v = innerProduct(g.orderings[i], g.orderings[j], alg);
      g.entries[j][i] = v;
      g.entries[i][j] = std::move(v);
    }
  }
  return g;
}

std::size_t exactRank(const RationalMatrix& matrix) {
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();

  // Clear denominators row by row; row scaling preserves rank.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer scale = 1;
    for (const auto& x : matrix[i]) {
      scale = boost::multiprecision::lcm(scale, Integer(boost::multiprecision::denominator(x)));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& x = matrix[i][j];
      a[i][j] = boost::multiprecision::numerator(x) * (scale / boost::multiprecision::denominator(x));
    }
  }

  std::size_t rank = 0;
  Integer previous = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Integer& p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Integer factor = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = a[i][j] * p - factor * a[rank][j];
        if (v != 0) {
          Integer q, r;
          boost::multiprecision::divide_qr(v, previous, q, r);
          if (r != 0) throw std::logic_error("Bareiss division not exact");
          v = std::move(q);
        }
        a[i][j] = std::move(v);
      }
      a[i][col] = 0;
    }
    previous = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t sectorDimension(const MonomialState& indices, const AlgebraSpec& alg,
                            const RestrictionRule& rule) {
  requireNonEmpty(indices);
  // Forbidden orderings only contribute zero rows and columns, so the rank is
  // taken over the allowed block.
  const auto words = allowedOrderings(indices, rule);
  const std::size_t n = words.size();
  if (n == 0) return 0;
  RationalMatrix block(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      block[i][j] = innerProduct(words[i], words[j], alg);
      block[j][i] = block[i][j];
    }
  }
  return exactRank(block);
}

std::size_t oneParticleDimension(const MonomialState& fixed, const ModeLattice& lattice,
                                 const AlgebraSpec& alg, const RestrictionRule& rule) {
  requireOnLattice(fixed, lattice);
  std::size_t total = 0;
  MonomialState extended = fixed;
  extended.push_back(0);
  for (Site j = 1; j <= lattice.size(); ++j) {
    extended.back() = j;
    total += sectorDimension(extended, alg, rule);
  }
  return total;
}

Rational extendedG(const MonomialState& fixed, const MonomialState& added,
                   const ModeLattice& lattice, const AlgebraSpec& alg,
                   const RestrictionRule& rule) {
  if (added.empty()) throw std::invalid_argument("extendedG: at least one added index required");
  requireOnLattice(added, lattice);
  MonomialState grown = fixed;
  grown.insert(grown.end(), added.begin(), added.end());
  const auto before = static_cast<long long>(oneParticleDimension(fixed, lattice, alg, rule));
  const auto after = static_cast<long long>(oneParticleDimension(grown, lattice, alg, rule));
  return Rational(before - after, static_cast<long long>(added.size()));
}

}  // namespace fockstat
