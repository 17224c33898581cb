#include "fockstat/cs_model.hpp"

#include <cmath>
#include <numbers>

namespace fockstat {

double Filling::kappa() const { return 2.0 * std::numbers::pi / L; }

Filling groundFilling(int N, const Rational& lambda, double L) {
  if (N < 1) throw std::invalid_argument("filling needs N >= 1");
  return Filling{std::vector<int>(static_cast<std::size_t>(N), 0), lambda, L};
}

std::vector<double> pseudomomenta(const Filling& filling, MomentumAnchor anchor) {
  const auto N = filling.n.size();
  if (N == 0) throw std::invalid_argument("pseudomomenta need N >= 1");
  if (filling.lambda < 0) throw std::invalid_argument("lambda must be >= 0");
  if (!(filling.L > 0)) throw std::invalid_argument("ring length must be positive");
  for (int n : filling.n) {
    if (n < 0) throw std::invalid_argument("gap quanta must be >= 0");
  }
  const double kappa = filling.kappa();
  const double lambda = filling.lambda.convert_to<double>();
  const double offset = lambda * static_cast<double>(N - 1) / 2.0;

  std::vector<double> ks(N);
  ks[0] = kappa * ((anchor == MomentumAnchor::Symmetric ? -offset : offset) + filling.n[0]);
  for (std::size_t i = 1; i < N; ++i) ks[i] = ks[i - 1] + kappa * (lambda + filling.n[i]);
  return ks;
}

double energy(const std::vector<double>& ks) {
  double e = 0.0;
  for (double k : ks) e += k * k;
  return e;
}

double groundEnergy(int N, const Rational& lambda, double L) {
  if (N < 1) throw std::invalid_argument("ground energy needs N >= 1");
  if (!(L > 0)) throw std::invalid_argument("ring length must be positive");
  const double l = lambda.convert_to<double>();
  const double n = N;
  return std::numbers::pi * std::numbers::pi * l * l * n * (n * n - 1.0) / (3.0 * L * L);
}

long long blockedOscillators(int N, int p, int q, const std::vector<int>& gaps) {
  if (N < 1 || p < 1 || q < 1) throw std::invalid_argument("blockedOscillators needs N, p, q >= 1");
  if (gaps.size() != static_cast<std::size_t>(N - 1))
    throw std::invalid_argument("expected N-1 gap excitations");
  // Gap quanta block q extra sites, except when p = q (a group of p behaves
  // as one Fermi oscillator) and when p = 1 (only the N occupied sites).
  const long long perQuantum = p == q ? p - 1 : (p == 1 ? 0 : q);
  long long total = static_cast<long long>(N) * p + (p - 1);
  for (int n : gaps) {
    if (n < 0) throw std::invalid_argument("gap quanta must be >= 0");
    total += perQuantum * n;
  }
  return total;
}

double phiKarabaliNair(int n, int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const double lambda = 2.0 * std::numbers::pi / (m + 1);
  return std::sin(n * lambda / 2.0) / std::sin(lambda / 2.0);
}

int truncatedBoseStructure(int n, int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (n < 0 || n > m) throw std::domain_error("state |n> outside the truncated space 0..m");
  return (1 + n) - (n + 1) * (n == m ? 1 : 0);
}

}  // namespace fockstat
