#include "fockstat/restrictions.hpp"

#include <algorithm>
#include <sstream>

namespace fockstat {

namespace {

void validateX(const std::vector<int>& X) {
  if (X.empty()) throw std::invalid_argument("X must be nonempty");
  if (X.front() <= 0) throw std::invalid_argument("X must contain positive gaps only");
  if (!std::is_sorted(X.begin(), X.end()) ||
      std::adjacent_find(X.begin(), X.end()) != X.end())
    throw std::invalid_argument("X must be strictly increasing");
}

std::string joinX(const std::vector<int>& X) {
  std::ostringstream out;
  for (std::size_t i = 0; i < X.size(); ++i) out << (i ? " " : "") << X[i];
  return out.str();
}

template <class Pred>
bool neighboursPass(const MonomialState& state, Pred&& pred) {
  for (std::size_t i = 1; i < state.size(); ++i) {
    if (!pred(state[i - 1], state[i])) return false;
  }
  return true;
}

}  // namespace

RestrictionRule RestrictionRule::none() { return RestrictionRule(NoRule{}); }

RestrictionRule RestrictionRule::cs(int p, int q) {
  if (p < 0) throw std::invalid_argument("CS rule requires p >= 0");
  if (q < 1) throw std::invalid_argument("CS rule requires q >= 1");
  return RestrictionRule(CSRule{p, q});
}

RestrictionRule RestrictionRule::xFermi(std::vector<int> X) {
  validateX(X);
  return RestrictionRule(XFermiRule{std::move(X)});
}

RestrictionRule RestrictionRule::xBose(std::vector<int> X) {
  validateX(X);
  return RestrictionRule(XBoseRule{std::move(X)});
}

RestrictionRule RestrictionRule::windowMin(int p) {
  if (p < 1) throw std::invalid_argument("window rule requires p >= 1");
  return RestrictionRule(WindowRule{p, WindowMode::Min});
}

RestrictionRule RestrictionRule::windowMax(int p) {
  if (p < 1) throw std::invalid_argument("window rule requires p >= 1");
  return RestrictionRule(WindowRule{p, WindowMode::Max});
}

RestrictionRule RestrictionRule::gentile(int m) {
  if (m < 1) throw std::invalid_argument("Gentile rule requires m >= 1");
  return RestrictionRule(GentileRule{m});
}

RestrictionRule RestrictionRule::totalCap(int p) {
  if (p < 1) throw std::invalid_argument("total cap requires p >= 1");
  return RestrictionRule(TotalCapRule{p});
}

bool RestrictionRule::orderSensitive() const {
  return std::holds_alternative<CSRule>(value_) || std::holds_alternative<XFermiRule>(value_) ||
         std::holds_alternative<XBoseRule>(value_);
}

std::string RestrictionRule::describe() const {
  struct Visitor {
    std::string operator()(const NoRule&) const { return "none"; }
    std::string operator()(const CSRule& r) const {
      return "cs(p=" + std::to_string(r.p) + ",q=" + std::to_string(r.q) + ")";
    }
    std::string operator()(const XFermiRule& r) const { return "x-fermi{" + joinX(r.X) + "}"; }
    std::string operator()(const XBoseRule& r) const { return "x-bose{" + joinX(r.X) + "}"; }
    std::string operator()(const WindowRule& r) const {
      return std::string(r.mode == WindowMode::Min ? "window-min" : "window-max") +
             "(p=" + std::to_string(r.p) + ")";
    }
    std::string operator()(const GentileRule& r) const {
      return "gentile(m=" + std::to_string(r.m) + ")";
    }
    std::string operator()(const TotalCapRule& r) const {
      return "total-cap(p=" + std::to_string(r.p) + ")";
    }
  };
  return std::visit(Visitor{}, value_);
}

bool thetaCS(const CSRule& rule, Site j, Site k) {
  const long long excess = static_cast<long long>(k) - j - rule.p;
  return excess >= 0 && excess % rule.q == 0;
}

bool thetaX(const std::vector<int>& X, Site j, Site k) {
  return std::binary_search(X.begin(), X.end(), k - j);
}

bool thetaXBose(const std::vector<int>& X, Site j, Site k) {
  return k == j || thetaX(X, j, k);
}

bool thetaWindow(const WindowRule& rule, Site j, Site k) {
  const int gap = std::abs(k - j);
  return rule.mode == WindowMode::Min ? gap >= rule.p : gap <= rule.p;
}

bool isAllowed(const MonomialState& state, const RestrictionRule& rule) {
  struct Visitor {
    const MonomialState& state;
    bool operator()(const NoRule&) const { return true; }
    bool operator()(const CSRule& r) const {
      return neighboursPass(state, [&](Site j, Site k) { return thetaCS(r, j, k); });
    }
    bool operator()(const XFermiRule& r) const {
      return neighboursPass(state, [&](Site j, Site k) { return thetaX(r.X, j, k); });
    }
    bool operator()(const XBoseRule& r) const {
      return neighboursPass(state, [&](Site j, Site k) { return thetaXBose(r.X, j, k); });
    }
    bool operator()(const WindowRule& r) const {
      MonomialState sorted = state;
      std::sort(sorted.begin(), sorted.end());
      return neighboursPass(sorted, [&](Site j, Site k) { return thetaWindow(r, j, k); });
    }
    bool operator()(const GentileRule& r) const {
      MonomialState sorted = state;
      std::sort(sorted.begin(), sorted.end());
      int run = 0;
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
        if (run > r.m) return false;
      }
      return true;
    }
    bool operator()(const TotalCapRule& r) const {
      return static_cast<long long>(state.size()) <= r.p;
    }
  };
  return std::visit(Visitor{state}, rule.value());
}

bool isAllowedAllPairs(const MonomialState& state, const WindowRule& rule) {
  for (std::size_t a = 0; a < state.size(); ++a) {
    for (std::size_t b = a + 1; b < state.size(); ++b) {
      if (!thetaWindow(rule, state[a], state[b])) return false;
    }
  }
  return true;
}

Integer multisetCount(int M, int N) { return binomial(M + N - 1, N); }

std::vector<MonomialState> enumerateAllowed(int M, int N, const RestrictionRule& rule,
                                            const EnumerationLimits& limits) {
  if (M < 1) throw std::invalid_argument("enumerateAllowed: M must be >= 1");
  if (N < 0) throw std::invalid_argument("enumerateAllowed: N must be >= 0");
  const Integer candidates = multisetCount(M, N);
  if (candidates > limits.cap)
    throw CapacityExceeded("enumeration of " + candidates.str() + " candidates (M=" +
                           std::to_string(M) + ", N=" + std::to_string(N) +
                           ") exceeds cap " + std::to_string(limits.cap));
  std::vector<MonomialState> out;
  forEachMultiset(M, N, [&](const MonomialState& s) {
    if (isAllowed(s, rule)) out.push_back(s);
  });
  return out;
}

}  // namespace fockstat
