#include "fockstat/core.hpp"

#include <algorithm>

namespace fockstat {

Integer binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Integer floor(const Rational& x) {
  Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

Integer ceil(const Rational& x) { return -floor(-x); }

long long floorDiv(long long a, long long b) {
  if (b <= 0) throw std::invalid_argument("floorDiv: divisor must be positive");
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

namespace {

Integer parseInteger(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad number: " + std::string(text));
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("bad number: " + std::string(text));
  }
  Integer value(std::string(text.substr(start)));
  return text.front() == '-' ? Integer(-value) : value;
}

}  // namespace

Rational parseRational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parseInteger(text));
  Integer num = parseInteger(text.substr(0, slash));
  Integer den = parseInteger(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(num, den);
}

std::string toString(const Rational& value) {
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

std::string toString(const Integer& value) { return value.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

ModeLattice::ModeLattice(int size) : size_(size) {
  if (size < 1) throw std::invalid_argument("lattice size must be >= 1");
}

std::vector<Site> ModeLattice::sites() const {
  std::vector<Site> out(static_cast<std::size_t>(size_));
  for (int i = 0; i < size_; ++i) out[static_cast<std::size_t>(i)] = i + 1;
  return out;
}

ModeLattice buildLattice(int M) { return ModeLattice(M); }

int OccupancyConfig::maxOccupancy() const {
  int best = 0;
  for (const auto& [site, n] : counts) best = std::max(best, n);
  return best;
}

void requireOnLattice(const MonomialState& state, const ModeLattice& lattice) {
  for (Site s : state) {
    if (!lattice.contains(s))
      throw std::invalid_argument("site " + std::to_string(s) + " outside lattice 1.." +
                                  std::to_string(lattice.size()));
  }
}

OccupancyConfig occupancyOf(const MonomialState& state, const ModeLattice& lattice) {
  requireOnLattice(state, lattice);
  OccupancyConfig config;
  for (Site s : state) ++config.counts[s];
  config.total = static_cast<int>(state.size());
  return config;
}

AlgebraSpec AlgebraSpec::bose() { return AlgebraSpec(AlgebraKind::Bose, 1); }
AlgebraSpec AlgebraSpec::fermi() { return AlgebraSpec(AlgebraKind::Fermi, -1); }

AlgebraSpec AlgebraSpec::quon(const Rational& q) {
  if (q <= -1 || q >= 1)
    throw std::invalid_argument("quon parameter must satisfy |q| < 1, got " + toString(q));
  return AlgebraSpec(AlgebraKind::Quon, q);
}

std::string AlgebraSpec::name() const {
  switch (kind_) {
    case AlgebraKind::Bose: return "bose";
    case AlgebraKind::Fermi: return "fermi";
    case AlgebraKind::Quon: return "quon:" + toString(q_);
  }
  return "?";
}

AlgebraSpec parseAlgebra(std::string_view text) {
  if (text == "bose") return AlgebraSpec::bose();
  if (text == "fermi") return AlgebraSpec::fermi();
  if (text == "quon") return AlgebraSpec::quon(0);
  if (text.starts_with("quon:")) return AlgebraSpec::quon(parseRational(text.substr(5)));
  throw std::invalid_argument("unknown algebra: " + std::string(text));
}

}  // namespace fockstat
