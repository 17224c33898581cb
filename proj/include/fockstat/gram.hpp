#pragma once

// Inner-product matrix of the permutation orbit of a monomial state, its
// exact rank (the sector dimension), and the one-particle dimensions and
// extended statistics parameters built from those ranks.

#include <vector>

#include "fockstat/algebra_engine.hpp"
#include "fockstat/restrictions.hpp"

namespace fockstat {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct GramMatrix {
  /// Distinct orderings of the multiset, lexicographic.
  std::vector<MonomialState> orderings;
  RationalMatrix entries;

  std::size_t dimension() const { return orderings.size(); }
};

/// All distinct orderings of `indices`, lexicographic.
std::vector<MonomialState> distinctOrderings(MonomialState indices);

/// Rows and columns of orderings forbidden by `rule` are zero.
GramMatrix gramMatrix(const MonomialState& indices, const AlgebraSpec& alg,
                      const RestrictionRule& rule = {});

/// Exact rank via fraction-free (Bareiss) elimination on a row-scaled
/// integer copy of the matrix.
std::size_t exactRank(const RationalMatrix& matrix);

/// d = rank of the Gram matrix of the orbit. Throws on the empty multiset.
std::size_t sectorDimension(const MonomialState& indices, const AlgebraSpec& alg,
                            const RestrictionRule& rule = {});

/// d^(1) = sum over lattice sites j of d(fixed + {j}).
std::size_t oneParticleDimension(const MonomialState& fixed, const ModeLattice& lattice,
                                 const AlgebraSpec& alg, const RestrictionRule& rule = {});

/// g = (d^(1)(fixed) - d^(1)(fixed + added)) / k, k = |added|.
Rational extendedG(const MonomialState& fixed, const MonomialState& added,
                   const ModeLattice& lattice, const AlgebraSpec& alg,
                   const RestrictionRule& rule = {});

}  // namespace fockstat
