#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitmatrix.hpp"
#include "error.hpp"

namespace latkit {

using IdPair = std::pair<std::string, std::string>;
using IndexPair = std::pair<std::size_t, std::size_t>;

/// A finite partially ordered set over opaque string ids.
///
/// The order is held as a dense reflexive bit matrix together with its
/// transpose; the cover relation (transitive reduction) is derived on
/// construction. Instances are immutable.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Reflexive-transitive closure of the given cover (or any generating)
  /// relation. Throws LatticeCheckFailure on duplicate or unknown ids and on
  /// cycles (not-antisymmetric, witness = first cyclic pair in input order).
  static FinitePoset from_covers(std::vector<std::string> ids,
                                 const std::vector<IdPair>& covers) {
    auto index = make_index(ids);
    const std::size_t n = ids.size();
    std::vector<std::vector<std::size_t>> succ(n);
    for (const auto& [lo, hi] : covers) {
      auto a = index.find(lo);
      if (a == index.end()) throw LatticeCheckFailure(CheckKind::unknown_id, {lo});
      auto b = index.find(hi);
      if (b == index.end()) throw LatticeCheckFailure(CheckKind::unknown_id, {hi});
      if (a->second == b->second)
        throw LatticeCheckFailure(CheckKind::not_antisymmetric, {lo, hi});
      succ[a->second].push_back(b->second);
    }

    // Kahn order on the generating graph; leftovers mean a cycle.
    std::vector<std::size_t> indeg(n, 0), order;
    order.reserve(n);
    for (const auto& s : succ)
      for (std::size_t j : s) ++indeg[j];
    for (std::size_t i = 0; i < n; ++i)
      if (indeg[i] == 0) order.push_back(i);
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t j : succ[order[k]])
        if (--indeg[j] == 0) order.push_back(j);

    BitMatrix leq(n);
    if (order.size() != n) {
      for (std::size_t i = 0; i < n; ++i) {
        leq.set(i, i);
        for (std::size_t j : succ[i]) leq.set(i, j);
      }
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          if (leq.test(i, k)) leq.or_row(i, k);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (leq.test(i, j) && leq.test(j, i))
            throw LatticeCheckFailure(CheckKind::not_antisymmetric, {ids[i], ids[j]});
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      leq.set(*it, *it);
      for (std::size_t j : succ[*it]) leq.or_row(*it, j);
    }
    return FinitePoset(std::move(ids), std::move(index), std::move(leq));
  }

  /// Takes a full order relation and validates reflexivity, antisymmetry and
  /// transitivity.
  static FinitePoset from_relation(std::vector<std::string> ids, BitMatrix leq) {
    auto index = make_index(ids);
    const std::size_t n = ids.size();
    if (leq.size() != n) throw Error("relation size does not match element count");
    for (std::size_t i = 0; i < n; ++i)
      if (!leq.test(i, i)) throw LatticeCheckFailure(CheckKind::not_reflexive, {ids[i]});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (leq.test(i, j) && leq.test(j, i))
          throw LatticeCheckFailure(CheckKind::not_antisymmetric, {ids[i], ids[j]});
    for (std::size_t x = 0; x < n; ++x) {
      const auto rx = leq.row(x);
      for (std::size_t y = 0; y < n; ++y) {
        if (!leq.test(x, y)) continue;
        const auto ry = leq.row(y);
        for (std::size_t k = 0; k < rx.size(); ++k) {
          if (const auto miss = ry[k] & ~rx[k]) {
            const std::size_t z = k * 64 + static_cast<std::size_t>(std::countr_zero(miss));
            throw LatticeCheckFailure(CheckKind::not_transitive, {ids[x], ids[y], ids[z]});
          }
        }
      }
    }
    return FinitePoset(std::move(ids), std::move(index), std::move(leq));
  }

  /// Builder path for relations that are partial orders by construction.
  static FinitePoset from_relation_unchecked(std::vector<std::string> ids, BitMatrix leq) {
    auto index = make_index(ids);
    return FinitePoset(std::move(ids), std::move(index), std::move(leq));
  }

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  std::optional<std::size_t> find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw LatticeCheckFailure(CheckKind::unknown_id, {std::string(id)});
  }

  bool leq(std::size_t i, std::size_t j) const noexcept { return leq_.test(i, j); }
  bool lt(std::size_t i, std::size_t j) const noexcept { return i != j && leq_.test(i, j); }
  bool comparable(std::size_t i, std::size_t j) const noexcept {
    return leq_.test(i, j) || leq_.test(j, i);
  }
  const BitMatrix& leq_matrix() const noexcept { return leq_; }
  /// Row i of the transpose: the down-set of i.
  const BitMatrix& geq_matrix() const noexcept { return geq_; }

  BitSet up_set(std::size_t i) const { return BitSet(size(), leq_.row(i)); }
  BitSet down_set(std::size_t i) const { return BitSet(size(), geq_.row(i)); }

  /// Cover pairs (lower, upper), sorted.
  const std::vector<IndexPair>& covers() const noexcept { return covers_; }
  std::vector<IdPair> cover_ids() const {
    std::vector<IdPair> out;
    out.reserve(covers_.size());
    for (auto [a, b] : covers_) out.emplace_back(ids_[a], ids_[b]);
    return out;
  }
  bool covered_by(std::size_t lo, std::size_t hi) const {
    const auto& u = upper_[lo];
    return std::binary_search(u.begin(), u.end(), static_cast<std::uint32_t>(hi));
  }
  const std::vector<std::uint32_t>& upper_covers(std::size_t i) const { return upper_[i]; }
  const std::vector<std::uint32_t>& lower_covers(std::size_t i) const { return lower_[i]; }

  /// Elements sorted by down-set size (a linear extension), ties by index.
  const std::vector<std::size_t>& linear_extension() const noexcept { return topo_; }

  /// Length of the longest chain from a minimal element up to i.
  std::size_t height(std::size_t i) const { return height_[i]; }

  std::size_t count_minimal() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < size(); ++i) c += lower_[i].empty();
    return c;
  }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.ids_ == b.ids_ && a.leq_ == b.leq_;
  }

 private:
  FinitePoset(std::vector<std::string> ids,
              std::unordered_map<std::string, std::size_t> index, BitMatrix leq)
      : ids_(std::move(ids)), index_(std::move(index)), leq_(std::move(leq)) {
    geq_ = leq_.transposed();
    derive_covers();
  }

  static std::unordered_map<std::string, std::size_t> make_index(
      const std::vector<std::string>& ids) {
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (!index.emplace(ids[i], i).second)
        throw LatticeCheckFailure(CheckKind::duplicate_id, {ids[i]});
    return index;
  }

  void derive_covers() {
    const std::size_t n = size();
    std::vector<std::size_t> down_size(n);
    for (std::size_t i = 0; i < n; ++i) down_size[i] = geq_.row_count(i);
    topo_.resize(n);
    std::iota(topo_.begin(), topo_.end(), std::size_t{0});
    std::stable_sort(topo_.begin(), topo_.end(),
                     [&](std::size_t a, std::size_t b) { return down_size[a] < down_size[b]; });

    upper_.assign(n, {});
    lower_.assign(n, {});
    for (std::size_t x = 0; x < n; ++x) {
      // Walk the strict up-set in linear-extension order; an element not yet
      // above a found cover is itself a cover.
      BitSet dominated(n);
      for (std::size_t y : topo_) {
        if (y == x || !leq_.test(x, y) || dominated.test(y)) continue;
        upper_[x].push_back(static_cast<std::uint32_t>(y));
        dominated |= BitSet(n, leq_.row(y));
      }
      std::sort(upper_[x].begin(), upper_[x].end());
      for (auto y : upper_[x]) {
        lower_[y].push_back(static_cast<std::uint32_t>(x));
        covers_.emplace_back(x, y);
      }
    }
    for (auto& l : lower_) std::sort(l.begin(), l.end());

    height_.assign(n, 0);
    for (std::size_t y : topo_)
      for (auto x : lower_[y]) height_[y] = std::max(height_[y], height_[x] + 1);
  }

  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  BitMatrix leq_;
  BitMatrix geq_;
  std::vector<IndexPair> covers_;
  std::vector<std::vector<std::uint32_t>> upper_;
  std::vector<std::vector<std::uint32_t>> lower_;
  std::vector<std::size_t> topo_;
  std::vector<std::size_t> height_;
};

/// Reflexive-transitive closure of `covers` over `elements`.
inline FinitePoset build_poset(std::vector<std::string> elements,
                               const std::vector<IdPair>& covers) {
  return FinitePoset::from_covers(std::move(elements), covers);
}

}  // namespace latkit
