#pragma once

// Closed-form statistics parameters per family, each paired with the value
// obtained from one-particle dimensions of explicit Gram matrices.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fockstat/counting.hpp"

namespace fockstat {

enum class Side { Left, Right };

/// Step function convention at argument 0.
enum class StepAtZero { Zero, One };

struct GReport {
  std::optional<Rational> gClosedForm;
  Rational gDefinitional;
  std::optional<bool> agrees;
  std::map<std::string, std::string> context;
};

GReport makeReport(std::optional<Rational> closedForm, Rational definitional,
                   std::map<std::string, std::string> context);

// --- Calogero-Sutherland type --------------------------------------------

/// Closest-packed block {i1, i1+p, ..., i1+(N-1)p} on 1..M. Throws
/// std::domain_error if it does not fit.
MonomialState closestPackedBlock(int M, int i1, int N, int p);

/// One-particle dimension of the closest-packed block:
/// T(i1-p) + [(i1-p)/q] + T(M-i1-Np+1) + [(M-i1-Np+1)/q].
Integer oneParticleDimensionCS(int M, int i1, int N, int p, int q, Bracket bracket,
                               StepAtZero step);

/// Change of the one-particle dimension when a particle is added next to the
/// block. Right: [(M-i1-Np+1)/q] - [(M-i1-(N+1)p+1)/q];
/// left: [(i1-p)/q] - [(i1-2p)/q].
Rational gCSFinite(int M, int i1, int N, int p, int q, Side side,
                   Bracket bracket = Bracket::Floor);

/// Same quantity from Gram ranks of the q = 0 quon algebra with the CS rule;
/// the added particle sits at i1+Np (right) or i1-p (left).
Rational gCSDefinitional(int M, int i1, int N, int p, int q, Side side);

GReport reportCSFinite(int M, int i1, int N, int p, int q, Side side,
                       Bracket bracket = Bracket::Floor);

/// Mean of the right-side g over lattice sizes M0 .. M0+q-1. Requires
/// M0 >= Np + q + i1.
Rational gAverageCS(int p, int q, int M0, int N, int i1, Bracket bracket = Bracket::Floor);

/// p/q + nN.
Rational gHaldaneCS(int p, int q, int nN);

// --- Gentile type --------------------------------------------------------

/// pattern[a] = number of oscillators holding a particles, a = 0..m.
/// Returns 1 when the particle lands on an oscillator holding m-1, else 0.
int gGentile(const std::vector<int>& pattern, int M, int targetFill);

/// n_{m-1} / (M - n_m).
Rational gGentileAverage(const std::vector<int>& pattern, int M);

/// The average recomputed from Gram ranks of the Bose algebra with a
/// Gentile cutoff, over every oscillator that can still take a particle.
Rational gGentileAverageDefinitional(const std::vector<int>& pattern, int M);

/// Single oscillator: 1 iff n + 1 == m.
Rational gSingleGentile(int n, int m);
/// Mean over n = 0..m-1.
Rational gSingleGentileAverage(int m);
Rational gSingleGentileDefinitional(int n, int m);

// --- total-number cutoff -------------------------------------------------

/// Fermi: 1 if n+k <= p else (M-n+1)/(p-n+1). Bose: 0 if n+k <= p else
/// M/(p-n+1). Throws std::domain_error for n+k > p+1.
Rational gParaRestricted(int M, int n, int k, int p, Statistic kind);

/// n-1 fixed and k added distinct sites, Fermi or Bose algebra with a total
/// particle cap p.
Rational gParaDefinitional(int M, int n, int k, int p, Statistic kind);

}  // namespace fockstat
