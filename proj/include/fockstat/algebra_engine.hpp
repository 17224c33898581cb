#pragma once

#include <map>

#include "fockstat/core.hpp"

namespace fockstat {

/// Finite sum of monomial states with nonzero exact coefficients.
class LinearCombination {
 public:
  void add(const MonomialState& state, const Rational& coefficient);

  const std::map<MonomialState, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Rational coefficient(const MonomialState& state) const;

 private:
  std::map<MonomialState, Rational> terms_;
};

/// Normal-ordered image of a_mode acting on the word `state`. Moving the
/// annihilator past k-1 creators before contracting at position k costs q^(k-1).
LinearCombination applyAnnihilator(Site mode, const MonomialState& state,
                                   const AlgebraSpec& alg, const ModeLattice& lattice);

/// <bra|ket> for two monomial states. Zero when the particle numbers differ.
Rational innerProduct(const MonomialState& bra, const MonomialState& ket,
                      const AlgebraSpec& alg);

}  // namespace fockstat
