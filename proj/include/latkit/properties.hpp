#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace latkit {

/// Outcome of a decider. A failed verdict carries the elements (indices)
/// that violate the defining law, in the order the law names them.
struct Verdict {
  bool holds = true;
  std::vector<std::size_t> witness;

  static Verdict yes() { return {}; }
  static Verdict no(std::vector<std::size_t> w) { return {false, std::move(w)}; }
  explicit operator bool() const noexcept { return holds; }
};

inline std::vector<std::string> witness_ids(const FiniteLattice& l, const Verdict& v) {
  std::vector<std::string> out;
  for (auto i : v.witness) out.push_back(l.id(i));
  return out;
}

/// { y : x ^ y = 0 and x v y = 1 }. In the one-element lattice the single
/// element complements itself.
inline std::vector<std::size_t> complements_of(const FiniteLattice& l, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < l.size(); ++y)
    if (l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()) out.push_back(y);
  return out;
}

inline std::vector<std::size_t> complements_of(const FiniteLattice& l, std::string_view x) {
  return complements_of(l, l.index(x));
}

/// Relative complements of x in [lo, hi].
inline std::vector<std::size_t> relative_complements(const FiniteLattice& l, std::size_t lo,
                                                     std::size_t hi, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < l.size(); ++y)
    if (l.leq(lo, y) && l.leq(y, hi) && l.meet(x, y) == lo && l.join(x, y) == hi)
      out.push_back(y);
  return out;
}

/// x <= z implies x v (y ^ z) = (x v y) ^ z; witness (x, y, z).
inline Verdict is_modular(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (l.leq(x, z) && l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z))
          return Verdict::no({x, y, z});
  return Verdict::yes();
}

/// x ^ (y v z) = (x ^ y) v (x ^ z); witness (x, y, z).
inline Verdict is_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return Verdict::no({x, y, z});
  return Verdict::yes();
}

/// The dual law x v (y ^ z) = (x v y) ^ (x v z).
inline Verdict is_join_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), l.join(x, z)))
          return Verdict::no({x, y, z});
  return Verdict::yes();
}

/// Cover-based upper semimodularity: a ^ b covered by a implies b covered by
/// a v b. Witness (a, b).
inline Verdict is_semimodular(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (l.covered_by(l.meet(a, b), a) && !l.covered_by(b, l.join(a, b)))
        return Verdict::no({a, b});
  return Verdict::yes();
}

enum class Forbidden { m3, n5 };

inline const char* to_string(Forbidden f) { return f == Forbidden::m3 ? "M3" : "N5"; }

/// A five-element sublattice isomorphic to M3 or N5. `embedding` lists the
/// images of the pattern elements in the order 0, a, b, c, 1 (M3) or
/// 0, x, y, z, 1 with x < z (N5).
struct ForbiddenSublattice {
  Forbidden kind;
  std::array<std::size_t, 5> embedding;
};

/// Searches for a diamond first, then a pentagon; none exists exactly when
/// the lattice is distributive.
inline std::optional<ForbiddenSublattice> forbidden_sublattice(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (l.poset().comparable(a, b)) continue;
      const std::size_t lo = l.meet(a, b), hi = l.join(a, b);
      for (std::size_t c = b + 1; c < n; ++c)
        if (l.meet(a, c) == lo && l.meet(b, c) == lo && l.join(a, c) == hi && l.join(b, c) == hi &&
            c != lo && c != hi)
          return ForbiddenSublattice{Forbidden::m3, {lo, a, b, c, hi}};
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      if (!l.lt(x, z)) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (l.meet(x, y) == l.meet(z, y) && l.join(x, y) == l.join(z, y))
          return ForbiddenSublattice{Forbidden::n5, {l.meet(x, y), x, y, z, l.join(x, y)}};
    }
  return std::nullopt;
}

/// Maximum antichain via Dilworth's theorem: width = n - (maximum matching
/// in the bipartite graph of strict comparabilities), with the antichain
/// read off a minimum vertex cover (Konig).
inline std::vector<std::size_t> maximum_antichain(const FinitePoset& p) {
  const std::size_t n = p.size();
  constexpr std::size_t none = SIZE_MAX;
  std::vector<std::size_t> match_right(n, none), match_left(n, none);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!p.lt(u, v) || visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] == none || augment(match_right[v])) {
        match_right[v] = u;
        match_left[u] = v;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    visited.assign(n, 0);
    augment(u);
  }
  // Konig: Z = vertices reachable from unmatched left vertices by
  // alternating paths; cover = (L \ Z) u (R n Z).
  std::vector<char> zl(n, 0), zr(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t u) {
    if (zl[u]) return;
    zl[u] = 1;
    for (std::size_t v = 0; v < n; ++v)
      if (p.lt(u, v) && match_left[u] != v && !zr[v]) {
        zr[v] = 1;
        if (match_right[v] != none) walk(match_right[v]);
      }
  };
  for (std::size_t u = 0; u < n; ++u)
    if (match_left[u] == none) walk(u);
  std::vector<std::size_t> antichain;
  for (std::size_t x = 0; x < n; ++x)
    if (zl[x] && !zr[x]) antichain.push_back(x);
  return antichain;
}

inline std::size_t width(const FinitePoset& p) { return maximum_antichain(p).size(); }

struct ComplementationProfile {
  Verdict complemented;
  Verdict uniquely_complemented;
  Verdict relatively_complemented;
  Verdict sectionally_complemented;
  Verdict atomic;
  Verdict dually_atomic;
  std::size_t width = 1;
  std::vector<std::size_t> max_antichain;
};

/// Witnesses: complemented (x), uniquely (x), relatively (lo, hi, x),
/// sectionally (a, x), atomic (x), dually atomic (x).
inline ComplementationProfile complementation_profile(const FiniteLattice& l) {
  const std::size_t n = l.size();
  ComplementationProfile out;
  for (std::size_t x = 0; x < n && (out.complemented || out.uniquely_complemented); ++x) {
    const auto c = complements_of(l, x).size();
    if (c == 0 && out.complemented) out.complemented = Verdict::no({x});
    if (c != 1 && out.uniquely_complemented) out.uniquely_complemented = Verdict::no({x});
  }
  for (std::size_t lo = 0; lo < n && out.relatively_complemented; ++lo)
    for (std::size_t hi = 0; hi < n && out.relatively_complemented; ++hi) {
      if (!l.leq(lo, hi)) continue;
      for (std::size_t x = 0; x < n; ++x)
        if (l.leq(lo, x) && l.leq(x, hi) && relative_complements(l, lo, hi, x).empty()) {
          out.relatively_complemented = Verdict::no({lo, hi, x});
          break;
        }
    }
  for (std::size_t a = 0; a < n && out.sectionally_complemented; ++a)
    for (std::size_t x = 0; x < n; ++x)
      if (l.leq(x, a) && relative_complements(l, l.bottom(), a, x).empty()) {
        out.sectionally_complemented = Verdict::no({a, x});
        break;
      }
  const auto atoms = l.atoms();
  const auto coatoms = l.coatoms();
  for (std::size_t x = 0; x < n; ++x) {
    if (x != l.bottom() && out.atomic &&
        std::none_of(atoms.begin(), atoms.end(), [&](auto a) { return l.leq(a, x); }))
      out.atomic = Verdict::no({x});
    if (x != l.top() && out.dually_atomic &&
        std::none_of(coatoms.begin(), coatoms.end(), [&](auto c) { return l.leq(x, c); }))
      out.dually_atomic = Verdict::no({x});
  }
  out.max_antichain = maximum_antichain(l.poset());
  out.width = out.max_antichain.size();
  return out;
}

/// In every interval each element has at most one relative complement;
/// witness (lo, hi, x) for an element with two or more.
inline Verdict has_unique_relative_complements(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t hi = 0; hi < n; ++hi) {
      if (!l.leq(lo, hi)) continue;
      for (std::size_t x = 0; x < n; ++x)
        if (l.leq(lo, x) && l.leq(x, hi) && relative_complements(l, lo, hi, x).size() > 1)
          return Verdict::no({lo, hi, x});
    }
  return Verdict::yes();
}

/// An involutive, order-reversing choice of complements; map[x] is the
/// orthocomplement of element x.
struct Orthocomplementation {
  std::vector<std::size_t> map;
  friend bool operator==(const Orthocomplementation&, const Orthocomplementation&) = default;
};

/// Checks the three defining conditions; witness is the failing element (or
/// pair, for order reversal).
inline Verdict is_orthocomplementation(const FiniteLattice& l, const Orthocomplementation& o) {
  const std::size_t n = l.size();
  if (o.map.size() != n) throw Error("orthocomplementation has wrong length");
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t y = o.map[x];
    if (y >= n) throw Error("orthocomplementation maps outside the lattice");
    if (l.meet(x, y) != l.bottom() || l.join(x, y) != l.top()) return Verdict::no({x});
    if (o.map[y] != x) return Verdict::no({x});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (l.leq(x, y) && !l.leq(o.map[y], o.map[x])) return Verdict::no({x, y});
  return Verdict::yes();
}

/// All orthocomplementations, found by exhaustive search: elements taken in
/// index order, candidate complements in index order, pairs assigned
/// together so the map stays an involution, pruned on order reversal.
inline std::vector<Orthocomplementation> orthocomplementations(const FiniteLattice& l) {
  const std::size_t n = l.size();
  constexpr std::size_t unset = SIZE_MAX;
  std::vector<std::vector<std::size_t>> comps(n);
  for (std::size_t x = 0; x < n; ++x) comps[x] = complements_of(l, x);
  std::vector<std::size_t> o(n, unset);
  std::vector<Orthocomplementation> found;

  auto antitone_ok = [&](std::size_t x) {
    for (std::size_t z = 0; z < n; ++z) {
      if (o[z] == unset) continue;
      if (l.leq(x, z) && !l.leq(o[z], o[x])) return false;
      if (l.leq(z, x) && !l.leq(o[x], o[z])) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    std::size_t x = from;
    while (x < n && o[x] != unset) ++x;
    if (x == n) {
      found.push_back({o});
      return;
    }
    for (std::size_t y : comps[x]) {
      if (o[y] != unset) continue;
      o[x] = y;
      o[y] = x;
      if (antitone_ok(x) && antitone_ok(y)) extend(x + 1);
      o[x] = o[y] = unset;
    }
  };
  extend(0);
  return found;
}

/// x <= y implies y = x v (y ^ o(x)); witness (x, y).
inline Verdict is_orthomodular(const FiniteLattice& l, const Orthocomplementation& o) {
  if (!is_orthocomplementation(l, o)) throw Error("not a valid orthocomplementation");
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (l.leq(x, y) && y != l.join(x, l.meet(y, o.map[x]))) return Verdict::no({x, y});
  return Verdict::yes();
}

/// { a : a ^ x = 0 and a ^ y = 0 imply a ^ (x v y) = 0 }.
inline std::vector<std::size_t> regular_elements(const FiniteLattice& l) {
  const std::size_t n = l.size(), zero = l.bottom();
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> disjoint;
    for (std::size_t x = 0; x < n; ++x)
      if (l.meet(a, x) == zero) disjoint.push_back(x);
    bool regular = true;
    for (std::size_t i = 0; i < disjoint.size() && regular; ++i)
      for (std::size_t j = i + 1; j < disjoint.size() && regular; ++j)
        regular = l.meet(a, l.join(disjoint[i], disjoint[j])) == zero;
    if (regular) out.push_back(a);
  }
  return out;
}

/// Surjective lattice homomorphisms onto the two-element chain, as 0/1
/// vectors over the elements. Each one is x -> [p <= x] for a nonzero
/// join-prime p (its kernel is a prime ideal), listed in order of p.
inline std::vector<std::vector<bool>> two_valued_homomorphisms(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::vector<bool>> out;
  for (std::size_t p = 0; p < n; ++p) {
    if (p == l.bottom()) continue;
    bool join_prime = true;
    for (std::size_t x = 0; x < n && join_prime; ++x)
      for (std::size_t y = x; y < n && join_prime; ++y)
        if (l.leq(p, l.join(x, y)) && !l.leq(p, x) && !l.leq(p, y)) join_prime = false;
    if (!join_prime) continue;
    std::vector<bool> h(n);
    for (std::size_t x = 0; x < n; ++x) h[x] = l.leq(p, x);
    out.push_back(std::move(h));
  }
  return out;
}

/// Every pair a, b has a relative pseudocomplement max{x : a ^ x <= b};
/// witness (a, b).
inline Verdict is_heyting(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t acc = l.bottom();
      for (std::size_t x = 0; x < n; ++x)
        if (l.leq(l.meet(a, x), b)) acc = l.join(acc, x);
      if (!l.leq(l.meet(a, acc), b)) return Verdict::no({a, b});
    }
  return Verdict::yes();
}

inline bool is_chain(const FiniteLattice& l) { return width(l.poset()) == 1; }

}  // namespace latkit
