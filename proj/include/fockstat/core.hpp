#pragma once

// Shared domain types: exact scalars, the mode lattice, monomial states,
// occupancies and the oscillator algebra selector.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fockstat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Site = int;

/// Raised when an enumeration would visit more candidates than allowed.
class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- exact arithmetic helpers -------------------------------------------

/// Binomial coefficient with the counting convention C(n, k) = 0 whenever
/// k < 0, n < 0 or k > n.
Integer binomial(long long n, long long k);

/// Mathematical floor / ceiling of a rational (rounds toward -inf / +inf).
Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// floor(a / b) for b > 0, correct for negative a.
long long floorDiv(long long a, long long b);

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on junk or b == 0.
Rational parseRational(std::string_view text);

/// Canonical text: "a" for integers, "a/b" otherwise (b > 0, reduced).
std::string toString(const Rational& value);
std::string toString(const Integer& value);

Rational pow(const Rational& base, unsigned exponent);

// --- lattice and states ---------------------------------------------------

class ModeLattice {
 public:
  explicit ModeLattice(int size);

  int size() const { return size_; }
  bool contains(Site s) const { return s >= 1 && s <= size_; }
  std::vector<Site> sites() const;

 private:
  int size_;
};

/// Sites 1..M. Throws std::invalid_argument for M < 1.
ModeLattice buildLattice(int M);

/// An ordered word of creation operators applied to the vacuum, leftmost
/// index first. The empty word is the vacuum.
using MonomialState = std::vector<Site>;

struct OccupancyConfig {
  std::map<Site, int> counts;  // only nonzero occupancies are stored
  int total = 0;

  int at(Site s) const {
    auto it = counts.find(s);
    return it == counts.end() ? 0 : it->second;
  }
  int maxOccupancy() const;
  bool operator==(const OccupancyConfig&) const = default;
};

OccupancyConfig occupancyOf(const MonomialState& state, const ModeLattice& lattice);

/// Throws std::invalid_argument if any index is off the lattice.
void requireOnLattice(const MonomialState& state, const ModeLattice& lattice);

// --- algebra --------------------------------------------------------------

enum class AlgebraKind { Bose, Fermi, Quon };

/// Exchange rule a_i a+_j = delta_ij + q a+_j a_i. Bose is q = 1, Fermi is
/// q = -1, Quon carries an explicit rational |q| < 1.
class AlgebraSpec {
 public:
  static AlgebraSpec bose();
  static AlgebraSpec fermi();
  static AlgebraSpec quon(const Rational& q);

  AlgebraKind kind() const { return kind_; }
  const Rational& q() const { return q_; }
  std::string name() const;

  bool operator==(const AlgebraSpec&) const = default;

 private:
  AlgebraSpec(AlgebraKind kind, Rational q) : kind_(kind), q_(std::move(q)) {}

  AlgebraKind kind_;
  Rational q_;
};

/// Accepts "bose", "fermi", "quon:<rational>" (and "quon" for q = 0).
AlgebraSpec parseAlgebra(std::string_view text);

}  // namespace fockstat
