#pragma once

#include <string>
#include <vector>

#include "lattice.hpp"

/// Small named lattices used throughout the tests, the CLI and the docs.
namespace latkit::fixtures {

inline FiniteLattice make(std::vector<std::string> ids, const std::vector<IdPair>& covers) {
  return lattice_from_poset(build_poset(std::move(ids), covers));
}

/// n-element chain with ids 0 < c1 < ... < c{n-2} < 1 (a single "0" for n = 1).
inline FiniteLattice chain(std::size_t n) {
  if (n == 0) throw Error("chain needs at least one element");
  std::vector<std::string> ids{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) ids.push_back("c" + std::to_string(i));
  if (n > 1) ids.push_back("1");
  std::vector<IdPair> covers;
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(ids[i], ids[i + 1]);
  return make(std::move(ids), covers);
}

inline FiniteLattice two_chain() { return chain(2); }

/// 0 < m < 1
inline FiniteLattice three_chain() { return make({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}); }

/// Subsets of k atoms a, b, c, ...; bottom "0", top "1", other elements named
/// by their atoms ("ab", ...).
inline FiniteLattice boolean(std::size_t k) {
  if (k > 12) throw Error("boolean lattice too large");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> ids(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (s == 0) ids[s] = "0";
    else if (s == n - 1 && k > 0) ids[s] = "1";
    else
      for (std::size_t b = 0; b < k; ++b)
        if (s >> b & 1u) ids[s] += static_cast<char>('a' + b);
  }
  std::vector<IdPair> covers;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t b = 0; b < k; ++b)
      if (!(s >> b & 1u)) covers.emplace_back(ids[s], ids[s | (std::size_t{1} << b)]);
  return make(std::move(ids), covers);
}

/// The diamond: 0 < a, b, c < 1.
inline FiniteLattice m3() {
  return make({"0", "a", "b", "c", "1"},
              {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

/// The pentagon: 0 < x < z < 1 and 0 < y < 1.
inline FiniteLattice n5() {
  return make({"0", "x", "y", "z", "1"},
              {{"0", "x"}, {"x", "z"}, {"z", "1"}, {"0", "y"}, {"y", "1"}});
}

/// The benzene ring: 0 < a < b < 1 and 0 < c < d < 1.
inline FiniteLattice o6() {
  return make({"0", "a", "b", "c", "d", "1"},
              {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "d"}, {"d", "1"}});
}

/// A diamond sitting on a chain: 0 < m < a, b, c < 1. Nondistributive with
/// M3 = {m, a, b, c, 1} as a sublattice; only 0 and 1 are complemented.
inline FiniteLattice m3_over_chain() {
  return make({"0", "m", "a", "b", "c", "1"},
              {{"0", "m"}, {"m", "a"}, {"m", "b"}, {"m", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

/// k pairwise incomparable points a, b, ... (a poset, not a lattice).
inline FinitePoset antichain(std::size_t k) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < k; ++i) ids.push_back(std::string(1, static_cast<char>('a' + i)));
  return build_poset(std::move(ids), {});
}

}  // namespace latkit::fixtures
