#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "poset.hpp"

namespace latkit {

/// A finite lattice: a validated poset plus total meet and join tables.
///
/// Tables are stored with 16-bit entries, which caps a lattice at 65535
/// elements (far above the sizes this library targets).
class FiniteLattice {
 public:
  using entry = std::uint16_t;
  static constexpr std::size_t max_size = 65535;

  FiniteLattice() = default;

  /// Trusted constructor for builders whose tables are correct by
  /// construction. Callers that cannot guarantee this go through
  /// lattice_from_poset().
  static FiniteLattice from_tables(FinitePoset poset, std::vector<entry> meet,
                                   std::vector<entry> join) {
    const std::size_t n = poset.size();
    if (n == 0) throw LatticeCheckFailure(CheckKind::empty, {});
    if (n > max_size) throw Error("lattice too large: " + std::to_string(n) + " elements");
    FiniteLattice l;
    l.poset_ = std::move(poset);
    l.meet_ = std::move(meet);
    l.join_ = std::move(join);
    l.locate_bounds();
    return l;
  }

  std::size_t size() const noexcept { return poset_.size(); }
  const FinitePoset& poset() const noexcept { return poset_; }
  const std::string& id(std::size_t i) const { return poset_.id(i); }
  const std::vector<std::string>& ids() const noexcept { return poset_.ids(); }
  std::size_t index(std::string_view id) const { return poset_.index(id); }

  std::size_t meet(std::size_t i, std::size_t j) const noexcept { return meet_[i * size() + j]; }
  std::size_t join(std::size_t i, std::size_t j) const noexcept { return join_[i * size() + j]; }
  bool leq(std::size_t i, std::size_t j) const noexcept { return poset_.leq(i, j); }
  bool lt(std::size_t i, std::size_t j) const noexcept { return poset_.lt(i, j); }
  bool covered_by(std::size_t i, std::size_t j) const { return poset_.covered_by(i, j); }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  std::size_t meet_all(std::span<const std::size_t> xs) const {
    std::size_t acc = top_;
    for (auto x : xs) acc = meet(acc, x);
    return acc;
  }
  std::size_t join_all(std::span<const std::size_t> xs) const {
    std::size_t acc = bottom_;
    for (auto x : xs) acc = join(acc, x);
    return acc;
  }

  std::vector<std::size_t> atoms() const {
    std::vector<std::size_t> a;
    for (auto x : poset_.upper_covers(bottom_)) a.push_back(x);
    return a;
  }
  std::vector<std::size_t> coatoms() const {
    std::vector<std::size_t> a;
    for (auto x : poset_.lower_covers(top_)) a.push_back(x);
    return a;
  }

  /// The induced lattice on `members` (indices into this lattice, kept in
  /// the given order). Throws if the subset is not closed under meet and
  /// join.
  FiniteLattice sublattice(const std::vector<std::size_t>& members) const {
    const std::size_t k = members.size();
    if (k == 0) throw Error("empty sublattice");
    std::vector<std::size_t> pos(size(), SIZE_MAX);
    for (std::size_t a = 0; a < k; ++a) pos[members[a]] = a;
    std::vector<std::string> ids;
    ids.reserve(k);
    BitMatrix rel(k);
    std::vector<entry> m(k * k), j(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      ids.push_back(id(members[a]));
      for (std::size_t b = 0; b < k; ++b) {
        const std::size_t x = members[a], y = members[b];
        if (leq(x, y)) rel.set(a, b);
        const std::size_t mm = pos[meet(x, y)], jj = pos[join(x, y)];
        if (mm == SIZE_MAX || jj == SIZE_MAX)
          throw Error("subset is not closed under meet and join: " + id(x) + ", " + id(y));
        m[a * k + b] = static_cast<entry>(mm);
        j[a * k + b] = static_cast<entry>(jj);
      }
    }
    return from_tables(FinitePoset::from_relation_unchecked(std::move(ids), std::move(rel)),
                       std::move(m), std::move(j));
  }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.poset_ == b.poset_ && a.meet_ == b.meet_ && a.join_ == b.join_;
  }

 private:
  void locate_bounds() {
    const std::size_t n = size();
    bottom_ = top_ = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (poset_.leq_matrix().row_count(i) == n) bottom_ = i;
      if (poset_.geq_matrix().row_count(i) == n) top_ = i;
    }
    if (bottom_ == n || top_ == n) throw Error("lattice without bounds");
  }

  FinitePoset poset_;
  std::vector<entry> meet_;
  std::vector<entry> join_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Computes meet and join tables for `p`. The first pair (in element order)
/// lacking a least upper bound or greatest lower bound is reported, joins
/// being checked before meets for each pair.
inline FiniteLattice lattice_from_poset(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n == 0) throw LatticeCheckFailure(CheckKind::empty, {});
  if (n > FiniteLattice::max_size) throw Error("poset too large for a lattice table");
  std::vector<std::size_t> up_count(n), down_count(n);
  for (std::size_t i = 0; i < n; ++i) {
    up_count[i] = p.leq_matrix().row_count(i);
    down_count[i] = p.geq_matrix().row_count(i);
  }

  // Among the common bounds, the one with the largest up-set (for joins) or
  // down-set (for meets) is the only candidate; it must dominate the rest.
  auto extremal = [n](const BitMatrix& rel, std::size_t a, std::size_t b,
                      const std::vector<std::size_t>& counts) -> std::size_t {
    BitSet common(n, rel.row(a));
    common &= BitSet(n, rel.row(b));
    std::size_t best = n;
    common.for_each([&](std::size_t z) {
      if (best == n || counts[z] > counts[best]) best = z;
    });
    if (best == n) return n;
    return common.is_subset_of(BitSet(n, rel.row(best))) ? best : n;
  };

  std::vector<FiniteLattice::entry> meet(n * n), join(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t jo = extremal(p.leq_matrix(), i, j, up_count);
      if (jo == n) throw LatticeCheckFailure(CheckKind::no_join, {p.id(i), p.id(j)});
      const std::size_t me = extremal(p.geq_matrix(), i, j, down_count);
      if (me == n) throw LatticeCheckFailure(CheckKind::no_meet, {p.id(i), p.id(j)});
      join[i * n + j] = join[j * n + i] = static_cast<FiniteLattice::entry>(jo);
      meet[i * n + j] = meet[j * n + i] = static_cast<FiniteLattice::entry>(me);
    }
  }
  return FiniteLattice::from_tables(p, std::move(meet), std::move(join));
}

/// The interval [x, y] with inherited operations.
inline FiniteLattice interval(const FiniteLattice& l, std::size_t x, std::size_t y) {
  if (!l.leq(x, y)) throw Error("interval endpoints not ordered: " + l.id(x) + " !<= " + l.id(y));
  std::vector<std::size_t> members;
  for (std::size_t z = 0; z < l.size(); ++z)
    if (l.leq(x, z) && l.leq(z, y)) members.push_back(z);
  return l.sublattice(members);
}

inline FiniteLattice interval(const FiniteLattice& l, std::string_view x, std::string_view y) {
  return interval(l, l.index(x), l.index(y));
}

/// Least subset containing `seed` and closed under meet and join, as
/// element indices in increasing order.
inline std::vector<std::size_t> generated_subset(const FiniteLattice& l,
                                                 const std::vector<std::size_t>& seed) {
  if (seed.empty()) throw Error("cannot generate a sublattice from an empty set");
  std::vector<char> in(l.size(), 0);
  std::vector<std::size_t> members;
  for (auto s : seed)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      for (std::size_t r : {l.meet(members[a], members[b]), l.join(members[a], members[b])}) {
        if (!in[r]) {
          in[r] = 1;
          members.push_back(r);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline FiniteLattice sublattice_generated(const FiniteLattice& l,
                                          const std::vector<std::size_t>& seed) {
  return l.sublattice(generated_subset(l, seed));
}

inline FiniteLattice sublattice_generated(const FiniteLattice& l,
                                          const std::vector<std::string>& seed_ids) {
  std::vector<std::size_t> seed;
  for (const auto& s : seed_ids) seed.push_back(l.index(s));
  return sublattice_generated(l, seed);
}

/// Componentwise product; element (a, b) gets id "(a,b)" and index
/// a * |rhs| + b.
inline FiniteLattice direct_product(const FiniteLattice& lhs, const FiniteLattice& rhs) {
  const std::size_t n1 = lhs.size(), n2 = rhs.size(), n = n1 * n2;
  if (n > FiniteLattice::max_size) throw Error("product too large");
  std::vector<std::string> ids;
  ids.reserve(n);
  BitMatrix leq(n);
  std::vector<FiniteLattice::entry> m(n * n), j(n * n);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b) ids.push_back("(" + lhs.id(a) + "," + rhs.id(b) + ")");
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t xa = x / n2, xb = x % n2;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t ya = y / n2, yb = y % n2;
      if (lhs.leq(xa, ya) && rhs.leq(xb, yb)) leq.set(x, y);
      m[x * n + y] = static_cast<FiniteLattice::entry>(lhs.meet(xa, ya) * n2 + rhs.meet(xb, yb));
      j[x * n + y] = static_cast<FiniteLattice::entry>(lhs.join(xa, ya) * n2 + rhs.join(xb, yb));
    }
  }
  return FiniteLattice::from_tables(FinitePoset::from_relation_unchecked(std::move(ids), std::move(leq)),
                                    std::move(m), std::move(j));
}

/// Isomorphic copy whose element k is element order[k] of `l`; ids can be
/// replaced as well (same length as `order`) or kept when `new_ids` is empty.
inline FiniteLattice relabel(const FiniteLattice& l, const std::vector<std::size_t>& order,
                             std::vector<std::string> new_ids = {}) {
  const std::size_t n = l.size();
  if (order.size() != n) throw Error("relabel: permutation has wrong length");
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;
  if (new_ids.empty())
    for (std::size_t k = 0; k < n; ++k) new_ids.push_back(l.id(order[k]));
  BitMatrix leq(n);
  std::vector<FiniteLattice::entry> m(n * n), j(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (l.leq(order[a], order[b])) leq.set(a, b);
      m[a * n + b] = static_cast<FiniteLattice::entry>(pos[l.meet(order[a], order[b])]);
      j[a * n + b] = static_cast<FiniteLattice::entry>(pos[l.join(order[a], order[b])]);
    }
  return FiniteLattice::from_tables(
      FinitePoset::from_relation(std::move(new_ids), std::move(leq)), std::move(m), std::move(j));
}

}  // namespace latkit
