#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "canonical.hpp"
#include "dot.hpp"
#include "free_lattice.hpp"
#include "properties.hpp"
#include "term.hpp"

namespace latkit {

/// A finite poset with commutative partial meet and join operations.
/// Comparable pairs always have their meet and join defined.
class PartialLattice {
 public:
  using Op = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

  PartialLattice() = default;

  /// Validates that every defined operation is consistent with the order and
  /// adds the forced values on comparable pairs.
  PartialLattice(FinitePoset poset, Op meets, Op joins, std::vector<std::string> adjoined = {})
      : poset_(std::move(poset)), meets_(normalize(meets)), joins_(normalize(joins)), adjoined_(std::move(adjoined)) {
    const std::size_t n = poset_.size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; ++y) {
        if (poset_.leq(x, y)) force(x, y, x, y);
        else if (poset_.leq(y, x)) force(x, y, y, x);
      }
    for (const auto& [k, m] : meets_)
      if (!poset_.leq(m, k.first) || !poset_.leq(m, k.second))
        throw Error("defined meet " + id(k.first) + " ^ " + id(k.second) + " = " + id(m) + " is not a lower bound");
    for (const auto& [k, j] : joins_)
      if (!poset_.leq(k.first, j) || !poset_.leq(k.second, j))
        throw Error("defined join " + id(k.first) + " v " + id(k.second) + " = " + id(j) + " is not an upper bound");
    for (const auto& a : adjoined_) poset_.index(a);
    std::sort(adjoined_.begin(), adjoined_.end());
  }

  /// Every operation of a lattice, fully defined.
  static PartialLattice of(const FiniteLattice& l) {
    Op m, j;
    for (std::size_t x = 0; x < l.size(); ++x)
      for (std::size_t y = x; y < l.size(); ++y) {
        m[{x, y}] = l.meet(x, y);
        j[{x, y}] = l.join(x, y);
      }
    return PartialLattice(l.poset(), std::move(m), std::move(j));
  }

  std::size_t size() const noexcept { return poset_.size(); }
  const FinitePoset& poset() const noexcept { return poset_; }
  const std::string& id(std::size_t i) const { return poset_.id(i); }
  std::size_t index(std::string_view s) const { return poset_.index(s); }
  bool leq(std::size_t x, std::size_t y) const noexcept { return poset_.leq(x, y); }
  const Op& meets() const noexcept { return meets_; }
  const Op& joins() const noexcept { return joins_; }
  const std::vector<std::string>& adjoined() const noexcept { return adjoined_; }
  bool is_adjoined(std::size_t i) const {
    return std::binary_search(adjoined_.begin(), adjoined_.end(), id(i));
  }

  std::optional<std::size_t> meet(std::size_t x, std::size_t y) const { return lookup(meets_, x, y); }
  std::optional<std::size_t> join(std::size_t x, std::size_t y) const { return lookup(joins_, x, y); }

 private:
  static Op normalize(const Op& op) {
    Op out;
    for (const auto& [k, v] : op) {
      auto key = std::minmax(k.first, k.second);
      auto [it, fresh] = out.emplace(key, v);
      if (!fresh && it->second != v) throw Error("partial operation is not commutative");
    }
    return out;
  }

  void force(std::size_t x, std::size_t y, std::size_t lo, std::size_t hi) {
    auto check = [&](Op& op, std::size_t v, const char* what) {
      auto [it, fresh] = op.emplace(std::pair{x, y}, v);
      if (!fresh && it->second != v)
        throw Error(std::string("defined ") + what + " of comparable " + id(x) + ", " + id(y) + " is wrong");
    };
    check(meets_, lo, "meet");
    check(joins_, hi, "join");
  }

  static std::optional<std::size_t> lookup(const Op& op, std::size_t x, std::size_t y) {
    auto it = op.find(std::minmax(x, y));
    if (it == op.end()) return std::nullopt;
    return it->second;
  }

  FinitePoset poset_;
  Op meets_, joins_;
  std::vector<std::string> adjoined_;
};

struct ExtensionSpec {
  FiniteLattice k;
  std::string a;
  std::string u = "u";
};

struct OnePointExtension {
  PartialLattice q;
  std::size_t a = 0, u = 0;
  std::vector<std::string> warnings;
};

/// Q = K + {u} with 0 < u < 1, a ^ u = 0 and a v u = 1. K keeps all of its
/// own operations; no other pair involving u gets a value.
inline OnePointExtension adjoin_unique_complement(const ExtensionSpec& spec) {
  const auto& k = spec.k;
  const auto a = k.poset().find(spec.a);
  if (!a) throw Error("unknown element '" + spec.a + "'");
  if (*a == k.bottom() || *a == k.top()) throw Error("element '" + spec.a + "' is a bound; need 0 < a < 1");
  if (k.poset().find(spec.u)) throw Error("new element id '" + spec.u + "' already names an element of K");

  const std::size_t n = k.size(), u = n;
  auto ids = k.ids();
  ids.push_back(spec.u);
  BitMatrix leq(n + 1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (k.leq(x, y)) leq.set(x, y);
  leq.set(u, u);
  leq.set(k.bottom(), u);
  leq.set(u, k.top());
  PartialLattice::Op m, j;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      m[{x, y}] = k.meet(x, y);
      j[{x, y}] = k.join(x, y);
    }
  m[{*a, u}] = k.bottom();
  j[{*a, u}] = k.top();

  OnePointExtension out;
  out.q = PartialLattice(FinitePoset::from_relation(std::move(ids), std::move(leq)), std::move(m), std::move(j),
                         {spec.u});
  out.a = *a;
  out.u = u;
  if (auto c = complements_of(k, *a); !c.empty()) {
    std::string list;
    for (auto x : c) list += (list.empty() ? "" : ", ") + k.id(x);
    out.warnings.push_back("'" + spec.a + "' already has a complement in K (" + list +
                           "); the result is not guaranteed to be almost uniquely complemented");
  }
  for (std::size_t x = 0; x < n; ++x)
    if (complements_of(k, x).size() > 1) {
      out.warnings.push_back("K is not almost uniquely complemented ('" + k.id(x) + "' has several complements)");
      break;
    }
  return out;
}

/// The lattice freely generated by a partial lattice Q, decided by Dean's
/// recursion. Each term carries the ideal of Q-elements forced below it and
/// the filter forced above it; s <= t holds iff it follows from the shape of
/// s or t, or some element of Q sits between them.
class FreeOverPartial {
 public:
  explicit FreeOverPartial(const PartialLattice& q) : q_(&q), n_(q.size()), bottom_(n_), top_(n_) {
    for (std::size_t x = 0; x < n_; ++x) {
      if (q.poset().up_set(x).count() == n_) bottom_ = x;
      if (q.poset().down_set(x).count() == n_) top_ = x;
    }
  }

  const PartialLattice& q() const noexcept { return *q_; }
  LatticeTerm term(std::size_t x) const { return LatticeTerm::var(q_->id(x)); }
  std::optional<std::size_t> bottom() const { return bottom_ < n_ ? std::optional(bottom_) : std::nullopt; }
  std::optional<std::size_t> top() const { return top_ < n_ ? std::optional(top_) : std::nullopt; }

  bool leq(const LatticeTerm& s, const LatticeTerm& t) {
    if (s == t) return !ideal(s).none();
    detail::TermPair key{s, t};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = false;
    if (s.is_join()) {
      r = std::all_of(s.children().begin(), s.children().end(), [&](const auto& c) { return leq(c, t); });
    } else if (t.is_meet()) {
      r = std::all_of(t.children().begin(), t.children().end(), [&](const auto& c) { return leq(s, c); });
    } else {
      r = filter(s).intersects(ideal(t));
      if (!r && s.is_meet())
        r = std::any_of(s.children().begin(), s.children().end(), [&](const auto& c) { return leq(c, t); });
      if (!r && t.is_join())
        r = std::any_of(t.children().begin(), t.children().end(), [&](const auto& c) { return leq(s, c); });
    }
    memo_.emplace(std::move(key), r);
    return r;
  }

  bool equal(const LatticeTerm& s, const LatticeTerm& t) { return leq(s, t) && leq(t, s); }

  /// Elements of Q forced below t.
  const BitSet& ideal(const LatticeTerm& t) { return bound(t, ideals_, true); }
  /// Elements of Q forced above t.
  const BitSet& filter(const LatticeTerm& t) { return bound(t, filters_, false); }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  const BitSet& bound(const LatticeTerm& t, std::unordered_map<LatticeTerm, BitSet, TermHash>& memo, bool down) {
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    BitSet s(n_);
    if (t.is_gen()) {
      auto x = q_->poset().find(t.symbol());
      if (!x) throw Error("term leaf '" + t.symbol() + "' is not an element of the partial lattice");
      s = down ? q_->poset().down_set(*x) : q_->poset().up_set(*x);
    } else if (t.is_meet() == down) {
      // Intersection side: meets for ideals, joins for filters.
      s = bound(t.children().front(), memo, down);
      for (std::size_t i = 1; i < t.children().size(); ++i) s &= bound(t.children()[i], memo, down);
    } else {
      for (const auto& c : t.children()) s |= bound(c, memo, down);
    }
    close(s, down);
    return memo.emplace(t, std::move(s)).first->second;
  }

  // Smallest ideal (filter) of Q containing s: a down-set (up-set) closed
  // under the defined joins (meets).
  void close(BitSet& s, bool down) const {
    const auto& p = q_->poset();
    const auto& ops = down ? q_->joins() : q_->meets();
    for (bool changed = true; changed;) {
      changed = false;
      for (auto x : s.elements()) s |= down ? p.down_set(x) : p.up_set(x);
      for (const auto& [k, v] : ops)
        if (s.test(k.first) && s.test(k.second) && !s.test(v)) {
          s.set(v);
          changed = true;
        }
    }
  }

  const PartialLattice* q_;
  std::size_t n_;
  std::size_t bottom_, top_;
  std::unordered_map<detail::TermPair, bool, detail::TermPairHash> memo_;
  std::unordered_map<LatticeTerm, BitSet, TermHash> ideals_, filters_;
};

inline bool fq_leq(const LatticeTerm& a, const LatticeTerm& b, const PartialLattice& q) {
  FreeOverPartial f(q);
  return f.leq(a, b);
}

struct KBounds {
  std::size_t lower = 0, upper = 0;
};

/// Largest non-adjoined element below `a` and smallest above it, found by
/// scanning with the forced order.
inline KBounds k_bounds(FreeOverPartial& f, const LatticeTerm& a) {
  const auto& q = f.q();
  std::vector<std::size_t> below, above;
  for (std::size_t x = 0; x < q.size(); ++x) {
    if (q.is_adjoined(x)) continue;
    if (f.leq(f.term(x), a)) below.push_back(x);
    if (f.leq(a, f.term(x))) above.push_back(x);
  }
  auto extreme = [&](const std::vector<std::size_t>& xs, bool max) -> std::size_t {
    for (auto c : xs)
      if (std::all_of(xs.begin(), xs.end(), [&](auto y) { return max ? q.leq(y, c) : q.leq(c, y); })) return c;
    throw Error("no " + std::string(max ? "largest lower" : "smallest upper") + " bound in K for " + a.to_string());
  };
  return {extreme(below, true), extreme(above, false)};
}

/// Classes of F(Q) reachable within `depth` binary rounds from the elements of
/// Q. Round r adds a ^ b and a v b for classes a, b found so far, keeping the
/// first (shortest) term of each new class.
class FQEnumeration {
 public:
  FQEnumeration(FreeOverPartial& f, std::size_t budget = 20000) : f_(&f), budget_(budget) {
    for (std::size_t x = 0; x < f.q().size(); ++x) add(f.term(x), 0);
    round_start_.push_back(0);
  }

  std::size_t depth() const noexcept { return round_start_.size() - 1; }
  const std::vector<LatticeTerm>& classes() const noexcept { return reps_; }
  /// Round in which each class first appeared.
  const std::vector<std::size_t>& rounds() const noexcept { return round_; }
  std::size_t terms_formed() const noexcept { return formed_; }

  void extend_to(std::size_t d) {
    while (depth() < d) step();
  }

  /// Index of the class of t, if it was reached.
  std::optional<std::size_t> find(const LatticeTerm& t) {
    auto key = key_of(t);
    if (auto it = buckets_.find(key); it != buckets_.end())
      for (auto c : it->second)
        if (f_->equal(reps_[c], t)) return c;
    return std::nullopt;
  }

 private:
  void step() {
    const std::size_t prev = round_start_.back(), end = reps_.size(), r = depth() + 1;
    round_start_.push_back(end);
    for (std::size_t i = 0; i < end; ++i)
      for (std::size_t j = std::max(i + 1, prev); j < end; ++j) {
        add(LatticeTerm::meet(reps_[i], reps_[j]), r);
        add(LatticeTerm::join(reps_[i], reps_[j]), r);
      }
  }

  void add(const LatticeTerm& t, std::size_t r) {
    ++formed_;
    if (find(t)) return;
    if (reps_.size() >= budget_)
      throw BudgetExceeded("F(Q) enumeration passed " + std::to_string(budget_) + " classes at round " +
                           std::to_string(r));
    buckets_[key_of(t)].push_back(reps_.size());
    reps_.push_back(t);
    round_.push_back(r);
  }

  std::pair<BitSet, BitSet> key_of(const LatticeTerm& t) { return {f_->ideal(t), f_->filter(t)}; }

  FreeOverPartial* f_;
  std::size_t budget_;
  std::size_t formed_ = 0;
  std::vector<LatticeTerm> reps_;
  std::vector<std::size_t> round_;
  std::vector<std::size_t> round_start_;
  std::map<std::pair<BitSet, BitSet>, std::vector<std::size_t>> buckets_;
};

/// Representatives B, within the depth cap, with x ^ B = 0 and x v B = 1 forced.
inline std::vector<LatticeTerm> complements_in_fq(const LatticeTerm& x, const PartialLattice& q, std::size_t depth,
                                                  std::size_t budget = 20000) {
  if (depth < 1) throw Error("depth cap must be at least 1");
  FreeOverPartial f(q);
  if (!f.bottom() || !f.top()) throw Error("partial lattice has no bounds");
  FQEnumeration e(f, budget);
  e.extend_to(depth);
  const auto zero = f.term(*f.bottom()), one = f.term(*f.top());
  std::vector<LatticeTerm> out;
  for (const auto& b : e.classes())
    if (f.leq(LatticeTerm::meet(x, b), zero) && f.leq(one, LatticeTerm::join(x, b))) out.push_back(b);
  return out;
}

struct BoundsRow {
  LatticeTerm term;
  std::size_t lower = 0, upper = 0;
};

struct ExtensionAudit {
  std::size_t depth = 0;
  std::size_t terms_formed = 0;
  std::vector<LatticeTerm> classes;
  std::vector<std::pair<LatticeTerm, LatticeTerm>> complemented_pairs;
  std::vector<BoundsRow> bounds;
  FinitePoset order;
  std::vector<std::string> warnings;
};

/// Depth-capped complement audit of F(Q). Bounds are tabulated for classes
/// reached within two rounds.
inline ExtensionAudit audit_extension(const OnePointExtension& ext, std::size_t depth, std::size_t budget = 20000) {
  const auto& q = ext.q;
  FreeOverPartial f(q);
  FQEnumeration e(f, budget);
  e.extend_to(depth);
  ExtensionAudit out;
  out.depth = depth;
  out.terms_formed = e.terms_formed();
  out.classes = e.classes();
  out.warnings = ext.warnings;
  const auto zero = f.term(*f.bottom()), one = f.term(*f.top());
  const auto& c = out.classes;
  const std::size_t m = c.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if ((i != j || m == 1) && f.leq(LatticeTerm::meet(c[i], c[j]), zero) &&
          f.leq(one, LatticeTerm::join(c[i], c[j])))
        out.complemented_pairs.emplace_back(c[i], c[j]);
  for (std::size_t i = 0; i < m; ++i)
    if (e.rounds()[i] <= 2) {
      auto b = k_bounds(f, c[i]);
      out.bounds.push_back({c[i], b.lower, b.upper});
    }
  std::vector<std::string> ids;
  BitMatrix rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    ids.push_back(c[i].to_string());
    for (std::size_t j = 0; j < m; ++j)
      if (f.leq(c[i], c[j])) rel.set(i, j);
  }
  out.order = FinitePoset::from_relation(std::move(ids), std::move(rel));
  return out;
}

inline std::string audit_text(const OnePointExtension& ext, const ExtensionAudit& a) {
  const auto& q = ext.q;
  std::ostringstream out;
  out << "extension: adjoin " << q.id(ext.u) << " as a complement of " << q.id(ext.a) << "\n";
  for (const auto& w : a.warnings) out << "warning: " << w << "\n";
  out << "depth: " << a.depth << "\n";
  out << "terms formed: " << a.terms_formed << "\n";
  out << "classes: " << a.classes.size() << "\n";
  out << "complemented pairs: " << a.complemented_pairs.size() << "\n";
  for (const auto& [x, y] : a.complemented_pairs) out << "  " << x.to_string() << " | " << y.to_string() << "\n";
  std::vector<std::string> of_u;
  const auto u = LatticeTerm::var(q.id(ext.u));
  for (const auto& [x, y] : a.complemented_pairs) {
    if (x == u) of_u.push_back(y.to_string());
    if (y == u) of_u.push_back(x.to_string());
  }
  out << "complements of " << q.id(ext.u) << ":";
  for (const auto& s : of_u) out << ' ' << s;
  out << "\n";
  out << "bounds (A_* <= A <= A^*), depth <= 2:\n";
  for (const auto& r : a.bounds)
    out << "  " << r.term.to_string() << " : " << q.id(r.lower) << " .. " << q.id(r.upper) << "\n";
  return out.str();
}

/// Inserts K into the prime interval [x, y] of `host`. Interior ids of K that
/// collide with host ids get a "'" suffix.
inline FiniteLattice insert_into_interval(const FiniteLattice& host, std::size_t x, std::size_t y,
                                          const FiniteLattice& k) {
  if (!host.covered_by(x, y))
    throw Error("insertion needs a cover pair; " + host.id(x) + " < " + host.id(y) + " is not one");
  if (k.size() < 2) throw Error("inserted lattice needs at least 2 elements");
  auto ids = host.ids();
  std::vector<IdPair> rel = host.poset().cover_ids();
  std::set<std::string> taken(ids.begin(), ids.end());
  std::vector<std::string> name(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i == k.bottom() || i == k.top()) continue;
    std::string s = k.id(i);
    while (taken.count(s)) s += '\'';
    taken.insert(s);
    name[i] = s;
    ids.push_back(s);
    rel.emplace_back(host.id(x), s);
    rel.emplace_back(s, host.id(y));
  }
  for (const auto& [lo, hi] : k.poset().covers())
    if (!name[lo].empty() && !name[hi].empty()) rel.emplace_back(name[lo], name[hi]);
  return lattice_from_poset(FinitePoset::from_covers(std::move(ids), rel));
}

inline FiniteLattice insert_into_interval(const FiniteLattice& host, std::string_view x, std::string_view y,
                                          const FiniteLattice& k) {
  return insert_into_interval(host, host.index(x), host.index(y), k);
}

/// Drops the bounds; meets and joins stay defined where they land inside.
inline PartialLattice weak_partial(const FiniteLattice& l) {
  if (l.size() < 3) throw Error("weak partial lattice needs at least 3 elements");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (i != l.bottom() && i != l.top()) keep.push_back(i);
  std::vector<std::string> ids;
  BitMatrix rel(keep.size());
  std::vector<std::size_t> pos(l.size(), l.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    ids.push_back(l.id(keep[a]));
    pos[keep[a]] = a;
    for (std::size_t b = 0; b < keep.size(); ++b)
      if (l.leq(keep[a], keep[b])) rel.set(a, b);
  }
  PartialLattice::Op m, j;
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a; b < keep.size(); ++b) {
      if (auto v = pos[l.meet(keep[a], keep[b])]; v < keep.size()) m[{a, b}] = v;
      if (auto v = pos[l.join(keep[a], keep[b])]; v < keep.size()) j[{a, b}] = v;
    }
  return PartialLattice(FinitePoset::from_relation(std::move(ids), std::move(rel)), std::move(m), std::move(j));
}

struct GeneratedCopy {
  bool isomorphic = false;
  FiniteLattice generated;
  std::string generated_code, expected_code;
  explicit operator bool() const noexcept { return isomorphic; }
};

/// Checks that `image` sits in `big` as a relative sublattice (same order, and
/// an operation is defined exactly when big's value lies in the image), then
/// compares the generated sublattice with `expected`.
inline GeneratedCopy check_generated_copy(const FiniteLattice& big, const PartialLattice& image,
                                          const FiniteLattice& expected) {
  std::vector<std::size_t> at(image.size());
  std::vector<char> inside(big.size(), 0);
  for (std::size_t i = 0; i < image.size(); ++i) {
    auto p = big.poset().find(image.id(i));
    if (!p) throw Error("image element '" + image.id(i) + "' is missing from the lattice");
    at[i] = *p;
    inside[*p] = 1;
  }
  std::unordered_map<std::size_t, std::size_t> back;
  for (std::size_t i = 0; i < image.size(); ++i) back[at[i]] = i;
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = 0; j < image.size(); ++j) {
      const auto pair = image.id(i) + ", " + image.id(j);
      if (image.leq(i, j) != big.leq(at[i], at[j])) throw Error("not a relative sublattice: order differs on " + pair);
      auto check = [&](std::optional<std::size_t> defined, std::size_t value, const char* what) {
        const bool in = inside[value];
        if (defined ? (!in || at[*defined] != value) : in)
          throw Error(std::string("not a relative sublattice: ") + what + " differs on " + pair);
      };
      check(image.meet(i, j), big.meet(at[i], at[j]), "meet");
      check(image.join(i, j), big.join(at[i], at[j]), "join");
    }
  GeneratedCopy out;
  out.generated = sublattice_generated(big, at);
  out.generated_code = canonical_code(out.generated);
  out.expected_code = canonical_code(expected);
  out.isomorphic = out.generated_code == out.expected_code;
  return out;
}

}  // namespace latkit
