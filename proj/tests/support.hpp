#pragma once

// Test-only helpers: seeded generators and brute-force oracles that do not
// go through the library's table-building code paths.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latkit/completion.hpp"
#include "latkit/lattice.hpp"
#include "latkit/term.hpp"

namespace latkit::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x1a77'1ce5ULL);
  return gen;
}

/// Random naturally labeled poset: each i < j edge present with probability p.
inline FinitePoset random_poset(std::size_t n, double p, std::mt19937_64& g) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  std::bernoulli_distribution coin(p);
  std::vector<IdPair> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(g)) edges.emplace_back(ids[i], ids[j]);
  return build_poset(std::move(ids), edges);
}

/// Random lattice as the completion of a random poset.
inline FiniteLattice random_lattice(std::size_t poset_size, std::mt19937_64& g,
                                    std::size_t max_size = 40) {
  while (true) {
    auto l = dedekind_macneille(random_poset(poset_size, 0.35, g)).lattice;
    if (l.size() <= max_size) return l;
  }
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& g) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), g);
  return p;
}

/// Least upper bound by enumeration over a raw relation; nullopt when the
/// set of upper bounds has no least element.
inline std::optional<std::size_t> brute_lub(const std::vector<std::vector<bool>>& leq,
                                            std::size_t a, std::size_t b) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> ub;
  for (std::size_t z = 0; z < n; ++z)
    if (leq[a][z] && leq[b][z]) ub.push_back(z);
  for (std::size_t u : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](std::size_t v) { return leq[u][v]; })) return u;
  return std::nullopt;
}

inline std::optional<std::size_t> brute_glb(const std::vector<std::vector<bool>>& leq,
                                            std::size_t a, std::size_t b) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> lb;
  for (std::size_t z = 0; z < n; ++z)
    if (leq[z][a] && leq[z][b]) lb.push_back(z);
  for (std::size_t u : lb)
    if (std::all_of(lb.begin(), lb.end(), [&](std::size_t v) { return leq[v][u]; })) return u;
  return std::nullopt;
}

inline std::vector<std::vector<bool>> relation_of(const FinitePoset& p) {
  std::vector<std::vector<bool>> r(p.size(), std::vector<bool>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) r[i][j] = p.leq(i, j);
  return r;
}

/// Isomorphism by trying every permutation (n <= 8).
inline bool brute_isomorphic(const std::vector<std::vector<bool>>& a,
                             const std::vector<std::vector<bool>>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = a[i][j] == b[perm[i]][perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Random term over x1..x`gens`, nesting at most `depth` operations.
inline LatticeTerm random_term(std::mt19937_64& g, std::size_t gens, std::size_t depth) {
  std::uniform_int_distribution<std::size_t> pick(1, gens);
  if (depth == 0 || g() % 4 == 0) return LatticeTerm::var("x" + std::to_string(pick(g)));
  std::vector<LatticeTerm> parts;
  const std::size_t k = 2 + g() % 2;
  for (std::size_t i = 0; i < k; ++i) parts.push_back(random_term(g, gens, depth - 1));
  return g() % 2 ? LatticeTerm::meet(parts) : LatticeTerm::join(parts);
}

}  // namespace latkit::testing
