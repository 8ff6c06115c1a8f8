#pragma once

#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "term.hpp"

namespace latkit {

struct IdentityVerdict {
  bool holds = true;
  /// Variables in sorted order; `witness` gives one element index per variable.
  std::vector<std::string> variables;
  std::vector<std::size_t> witness;
  explicit operator bool() const noexcept { return holds; }
};

/// Checks lhs = rhs under every assignment of the variables into `l`.
inline IdentityVerdict satisfies_identity(const FiniteLattice& l, const LatticeTerm& lhs,
                                          const LatticeTerm& rhs) {
  std::set<std::string> vars = lhs.symbols();
  for (const auto& s : rhs.symbols()) vars.insert(s);
  IdentityVerdict out;
  out.variables.assign(vars.begin(), vars.end());
  const std::size_t k = vars.size(), n = l.size();
  if (k > 6) throw Error("identity has " + std::to_string(k) + " variables; at most 6 supported");
  double work = 1;
  for (std::size_t i = 0; i < k; ++i) work *= static_cast<double>(n);
  if (work > 1e8) throw BudgetExceeded("identity check needs " + std::to_string(n) + "^" +
                                       std::to_string(k) + " assignments, over 10^8");
  std::vector<std::size_t> a(k, 0);
  auto leaf = [&](const std::string& s) {
    return a[static_cast<std::size_t>(std::lower_bound(out.variables.begin(), out.variables.end(), s) -
                                      out.variables.begin())];
  };
  while (true) {
    if (evaluate(lhs, l, leaf) != evaluate(rhs, l, leaf)) {
      out.holds = false;
      out.witness = a;
      return out;
    }
    std::size_t i = k;
    while (i > 0 && ++a[i - 1] == n) a[--i] = 0;
    if (i == 0) return out;
  }
}

inline IdentityVerdict satisfies_identity(const FiniteLattice& l, std::string_view lhs,
                                          std::string_view rhs) {
  return satisfies_identity(l, parse_term(lhs), parse_term(rhs));
}

namespace identities {

inline constexpr std::string_view salii_lhs = "(x ^ (y v z)) v (y ^ (x v t))";
inline constexpr std::string_view salii_rhs = "((x ^ (y v z)) v y) ^ (x v (y ^ (x v t)))";
inline constexpr std::string_view modular_lhs = "x v (y ^ (x v z))";
inline constexpr std::string_view modular_rhs = "(x v y) ^ (x v z)";
inline constexpr std::string_view distributive_lhs = "(x ^ y) v (x ^ z)";
inline constexpr std::string_view distributive_rhs = "x ^ (y v z)";

}  // namespace identities

}  // namespace latkit
