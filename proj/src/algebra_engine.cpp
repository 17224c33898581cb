#include "fockstat/algebra_engine.hpp"

#include <algorithm>
#include <map>

namespace fockstat {

void LinearCombination::add(const MonomialState& state, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(state, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LinearCombination::coefficient(const MonomialState& state) const {
  auto it = terms_.find(state);
  return it == terms_.end() ? Rational(0) : it->second;
}

LinearCombination applyAnnihilator(Site mode, const MonomialState& state,
                                   const AlgebraSpec& alg, const ModeLattice& lattice) {
  if (!lattice.contains(mode))
    throw std::invalid_argument("annihilator mode " + std::to_string(mode) + " outside lattice");
  requireOnLattice(state, lattice);

  LinearCombination result;
  Rational weight = 1;  // q^(k-1)
  for (std::size_t k = 0; k < state.size(); ++k) {
    if (k > 0) {
      weight *= alg.q();
      if (weight == 0) break;
    }
    if (state[k] != mode) continue;
    MonomialState rest;
    rest.reserve(state.size() - 1);
    rest.insert(rest.end(), state.begin(), state.begin() + static_cast<std::ptrdiff_t>(k));
    rest.insert(rest.end(), state.begin() + static_cast<std::ptrdiff_t>(k) + 1, state.end());
    result.add(rest, weight);
  }
  return result;
}

namespace {

// <0| a_{bra[n-1]} ... a_{bra[from]} |ket>; the innermost annihilator is
// a_{bra[from]}. Different contraction paths often leave the same remainder,
// so results are memoised on the remainder (its length fixes `from`).
class Contraction {
 public:
  Contraction(const MonomialState& bra, const AlgebraSpec& alg) : bra_(bra), alg_(alg) {}

  Rational operator()(const MonomialState& ket) {
    const std::size_t from = bra_.size() - ket.size();
    if (from == bra_.size()) return 1;
    if (auto it = memo_.find(ket); it != memo_.end()) return it->second;
    const Site mode = bra_[from];
    Rational total = 0;
    Rational weight = 1;
    for (std::size_t k = 0; k < ket.size(); ++k) {
      if (k > 0) {
        weight *= alg_.q();
        if (weight == 0) break;
      }
      if (ket[k] != mode) continue;
      MonomialState rest;
      rest.reserve(ket.size() - 1);
      rest.insert(rest.end(), ket.begin(), ket.begin() + static_cast<std::ptrdiff_t>(k));
      rest.insert(rest.end(), ket.begin() + static_cast<std::ptrdiff_t>(k) + 1, ket.end());
      total += weight * (*this)(rest);
    }
    memo_.emplace(ket, total);
    return total;
  }

 private:
  const MonomialState& bra_;
  const AlgebraSpec& alg_;
  std::map<MonomialState, Rational> memo_;
};

}  // namespace

Rational innerProduct(const MonomialState& bra, const MonomialState& ket,
                      const AlgebraSpec& alg) {
  if (bra.size() != ket.size()) return 0;
  // Different multisets never contract fully.
  MonomialState a = bra, b = ket;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return 0;
  return Contraction(bra, alg)(ket);
}

}  // namespace fockstat
