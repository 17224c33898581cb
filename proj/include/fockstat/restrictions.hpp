#pragma once

// Projections of a Fock space: neighbour rules on the base space (Theta
// projectors) and single-oscillator / total-number cutoffs. A monomial that
// fails its rule is a null state.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fockstat/core.hpp"

namespace fockstat {

struct NoRule {};

/// Allowed neighbour gaps k - j = p + n q, n >= 0 (Ha's lattice form of the
/// Calogero-Sutherland exclusion with lambda = p/q).
struct CSRule {
  int p = 1;
  int q = 1;
};

/// Neighbour gaps restricted to a set X (Fermi-like); the Bose-like variant
/// additionally admits gap 0.
struct XFermiRule {
  std::vector<int> X;
};
struct XBoseRule {
  std::vector<int> X;
};

enum class WindowMode { Min, Max };

/// |k - j| >= p (Min) or |k - j| <= p (Max), applied to neighbours of the
/// sorted state.
struct WindowRule {
  int p = 1;
  WindowMode mode = WindowMode::Min;
};

/// At most m particles per oscillator.
struct GentileRule {
  int m = 1;
};

/// At most p particles in total.
struct TotalCapRule {
  int p = 1;
};

class RestrictionRule {
 public:
  using Variant =
      std::variant<NoRule, CSRule, XFermiRule, XBoseRule, WindowRule, GentileRule, TotalCapRule>;

  RestrictionRule() = default;

  static RestrictionRule none();
  static RestrictionRule cs(int p, int q);
  static RestrictionRule xFermi(std::vector<int> X);
  static RestrictionRule xBose(std::vector<int> X);
  static RestrictionRule windowMin(int p);
  static RestrictionRule windowMax(int p);
  static RestrictionRule gentile(int m);
  static RestrictionRule totalCap(int p);

  const Variant& value() const { return value_; }
  bool isNone() const { return std::holds_alternative<NoRule>(value_); }

  /// True when the rule depends on the order of the word (CS and X rules);
  /// such rules only ever admit non-decreasing words.
  bool orderSensitive() const;

  std::string describe() const;

 private:
  explicit RestrictionRule(Variant v) : value_(std::move(v)) {}
  Variant value_ = NoRule{};
};

bool thetaCS(const CSRule& rule, Site j, Site k);
bool thetaX(const std::vector<int>& X, Site j, Site k);
bool thetaXBose(const std::vector<int>& X, Site j, Site k);
bool thetaWindow(const WindowRule& rule, Site j, Site k);

bool isAllowed(const MonomialState& state, const RestrictionRule& rule);

/// Max-window variant that requires every pair (not only neighbours) to lie
/// within the window. Diagnostics only.
bool isAllowedAllPairs(const MonomialState& state, const WindowRule& rule);

struct EnumerationLimits {
  std::uint64_t cap = 20'000'000;
};

/// Number of multisets of size N over M sites, C(M+N-1, N).
Integer multisetCount(int M, int N);

/// Calls visit(sorted multiset) for every multiset of size N over 1..M in
/// lexicographic order.
template <class Visit>
void forEachMultiset(int M, int N, Visit&& visit) {
  MonomialState current(static_cast<std::size_t>(N), 1);
  if (N == 0) {
    visit(current);
    return;
  }
  while (true) {
    visit(current);
    int pos = N - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == M) --pos;
    if (pos < 0) return;
    const Site next = current[static_cast<std::size_t>(pos)] + 1;
    for (int i = pos; i < N; ++i) current[static_cast<std::size_t>(i)] = next;
  }
}

/// Sorted allowed states over 1..M with N particles, lexicographic order.
/// Throws CapacityExceeded when C(M+N-1, N) exceeds the cap.
std::vector<MonomialState> enumerateAllowed(int M, int N, const RestrictionRule& rule,
                                            const EnumerationLimits& limits = {});

}  // namespace fockstat
