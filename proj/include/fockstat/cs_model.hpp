#pragma once

// Calogero-Sutherland spectrum on a ring, blocked-oscillator counts on the
// integer lattice, and single-oscillator structure functions of Gentile type.

#include <vector>

#include "fockstat/core.hpp"

namespace fockstat {

/// Where the first pseudomomentum sits for n_1 = 0.
enum class MomentumAnchor {
  Symmetric,  // k_1 = kappa(-lambda (N-1)/2 + n_1): ground set centred on 0
  Literal,    // k_1 = kappa(+lambda (N-1)/2 + n_1)
};

struct Filling {
  std::vector<int> n;  // n_1 .. n_N, all >= 0
  Rational lambda;     // coupling, >= 0
  double L = 1.0;      // ring length

  double kappa() const;
};

/// Ground filling (all n = 0) with N particles.
Filling groundFilling(int N, const Rational& lambda, double L);

/// k_{i+1} - k_i = kappa (lambda + n_{i+1}).
std::vector<double> pseudomomenta(const Filling& filling,
                                  MomentumAnchor anchor = MomentumAnchor::Symmetric);

double energy(const std::vector<double>& ks);

/// pi^2 lambda^2 N (N^2 - 1) / (3 L^2).
double groundEnergy(int N, const Rational& lambda, double L);

/// N p + (p - 1) + sum of Delta_a over the N-1 gap excitations.
long long blockedOscillators(int N, int p, int q, const std::vector<int>& gaps);

/// sin(n lambda / 2) / sin(lambda / 2) with lambda = 2 pi / (m + 1).
double phiKarabaliNair(int n, int m);

/// Eigenvalue of a a+ on |n> for the Bose oscillator truncated at m.
int truncatedBoseStructure(int n, int m);

}  // namespace fockstat
