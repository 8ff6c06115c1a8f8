#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "term.hpp"

namespace latkit {

namespace detail {

struct TermPair {
  LatticeTerm a, b;
  friend bool operator==(const TermPair&, const TermPair&) = default;
};

struct TermPairHash {
  std::size_t operator()(const TermPair& p) const noexcept {
    return p.a.hash() * 0x9e3779b97f4a7c15ULL ^ (p.b.hash() + 0x632be59bd9b4e019ULL);
  }
};

}  // namespace detail

/// Word problem and canonical forms in the free lattice, by Whitman's
/// recursion. Memo tables live in the object, so one instance can serve many
/// related queries.
class FreeLattice {
 public:
  explicit FreeLattice(std::size_t recursion_limit = 100000) : limit_(recursion_limit) {}

  bool leq(const LatticeTerm& s, const LatticeTerm& t) {
    if (s == t) return true;
    detail::TermPair key{s, t};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++level_ > limit_) {
      level_ = 0;
      throw Error("free lattice comparison exceeded the recursion bound");
    }
    const bool r = decide(s, t);
    --level_;
    memo_.emplace(std::move(key), r);
    return r;
  }

  bool equal(const LatticeTerm& s, const LatticeTerm& t) { return s == t || (leq(s, t) && leq(t, s)); }

  /// Canonical form: the unique shortest term of the same free-lattice
  /// element, with children in the fixed term order.
  LatticeTerm canonical(const LatticeTerm& t) {
    if (t.is_gen()) return t;
    if (auto it = canon_.find(t); it != canon_.end()) return it->second;
    std::vector<LatticeTerm> parts;
    for (const auto& c : t.children()) parts.push_back(canonical(c));
    auto out = reduce(t.kind(), std::move(parts));
    canon_.emplace(t, out);
    return out;
  }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  bool decide(const LatticeTerm& s, const LatticeTerm& t) {
    if (s.is_join()) {
      for (const auto& c : s.children())
        if (!leq(c, t)) return false;
      return true;
    }
    if (t.is_meet()) {
      for (const auto& c : t.children())
        if (!leq(s, c)) return false;
      return true;
    }
    if (s.is_gen() && t.is_gen()) return s.symbol() == t.symbol();
    if (s.is_meet())
      for (const auto& c : s.children())
        if (leq(c, t)) return true;
    if (t.is_join())
      for (const auto& c : t.children())
        if (leq(s, c)) return true;
    return false;
  }

  // `parts` are canonical. For a join: drop joinands below another joinand,
  // and replace a meet joinand by one of its meetands when that meetand is
  // already below the whole join. Meets are the dual.
  LatticeTerm reduce(LatticeTerm::Kind kind, std::vector<LatticeTerm> parts) {
    const bool is_join = kind == LatticeTerm::Kind::join;
    auto below = [&](const LatticeTerm& a, const LatticeTerm& b) {
      return is_join ? leq(a, b) : leq(b, a);
    };
    while (true) {
      auto whole = is_join ? LatticeTerm::join(parts) : LatticeTerm::meet(parts);
      if (whole.kind() != kind) return whole;
      parts = whole.children();
      std::vector<LatticeTerm> kept;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < parts.size() && !redundant; ++j)
          redundant = i != j && below(parts[i], parts[j]);
        if (!redundant) kept.push_back(parts[i]);
      }
      if (kept.size() == 1) return kept.front();
      whole = is_join ? LatticeTerm::join(kept) : LatticeTerm::meet(kept);
      bool changed = false;
      for (std::size_t i = 0; i < kept.size() && !changed; ++i) {
        const auto& p = kept[i];
        if (p.is_gen() || p.kind() == kind) continue;
        for (const auto& q : p.children()) {
          if (below(q, whole)) {
            kept[i] = q;
            changed = true;
            break;
          }
        }
      }
      if (!changed) return whole;
      parts = std::move(kept);
    }
  }

  std::unordered_map<detail::TermPair, bool, detail::TermPairHash> memo_;
  std::unordered_map<LatticeTerm, LatticeTerm, TermHash> canon_;
  std::size_t limit_;
  std::size_t level_ = 0;
};

namespace detail {

inline void require_common_alphabet(const LatticeTerm& s, const LatticeTerm& t) {
  int kind = -1;
  for (const auto* term : {&s, &t})
    for (const auto& sym : term->symbols()) {
      const int k = LatticeTerm::is_free_symbol(sym) ? 0 : 1;
      if (kind != -1 && k != kind)
        throw Error("terms mix free generators with constants ('" + sym + "')");
      kind = k;
    }
}

}  // namespace detail

inline bool free_leq(const LatticeTerm& s, const LatticeTerm& t) {
  detail::require_common_alphabet(s, t);
  return FreeLattice().leq(s, t);
}

inline bool free_equal(const LatticeTerm& s, const LatticeTerm& t) {
  detail::require_common_alphabet(s, t);
  return FreeLattice().equal(s, t);
}

inline LatticeTerm canonical_form(const LatticeTerm& t) { return FreeLattice().canonical(t); }

/// Distinct elements of FL(n) reached from the generators in `rounds` rounds,
/// each round adding a ^ b and a v b for every pair already reached. Budget
/// caps the number of candidate terms examined.
inline std::vector<std::size_t> count_canonical_terms_by_round(std::size_t n, std::size_t rounds,
                                                               std::uint64_t budget = 50'000'000) {
  if (n == 0) throw Error("need at least one generator");
  FreeLattice fl;
  std::vector<LatticeTerm> all;
  std::unordered_set<LatticeTerm, TermHash> seen;
  for (std::size_t k = 1; k <= n; ++k) {
    all.push_back(LatticeTerm::var("x" + std::to_string(k)));
    seen.insert(all.back());
  }
  std::vector<std::size_t> counts{all.size()};
  std::size_t frontier = 0;
  std::uint64_t spent = 0;
  for (std::size_t r = 1; r <= rounds; ++r) {
    const std::size_t end = all.size();
    for (std::size_t j = frontier; j < end; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        spent += 2;
        if (spent > budget) throw BudgetExceeded("term enumeration exceeded budget of " + std::to_string(budget));
        for (auto t : {fl.canonical(all[i] & all[j]), fl.canonical(all[i] | all[j])})
          if (seen.insert(t).second) all.push_back(std::move(t));
      }
    frontier = end;
    counts.push_back(all.size());
    if (all.size() == end) {
      counts.resize(rounds + 1, end);
      break;
    }
  }
  return counts;
}

inline std::size_t count_canonical_terms(std::size_t n, std::size_t depth,
                                         std::uint64_t budget = 50'000'000) {
  return count_canonical_terms_by_round(n, depth, budget).back();
}

}  // namespace latkit
