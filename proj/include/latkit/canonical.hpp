#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace latkit {

namespace detail {

/// Replaces each color by its rank among the distinct values of `keys`.
template <class Key>
std::vector<std::size_t> densify(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    out[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
                                      sorted.begin());
  return out;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const FinitePoset& p) : p_(p), n_(p.size()) {}

  std::pair<std::string, std::vector<std::size_t>> run() {
    std::vector<std::vector<std::size_t>> init(n_);
    for (std::size_t v = 0; v < n_; ++v)
      init[v] = {p_.height(v), p_.geq_matrix().row_count(v), p_.leq_matrix().row_count(v),
                 p_.lower_covers(v).size(), p_.upper_covers(v).size()};
    search(densify(init));
    return {best_, best_order_};
  }

 private:
  // Colors refined by the color counts of each element's strict down-set and
  // strict up-set, until stable.
  std::vector<std::size_t> refine(std::vector<std::size_t> color) const {
    std::size_t classes = *std::max_element(color.begin(), color.end()) + 1;
    while (true) {
      std::vector<std::vector<std::size_t>> sig(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        sig[v].assign(2 * classes + 1, 0);
        sig[v][0] = color[v];
        for (std::size_t w = 0; w < n_; ++w) {
          if (w == v) continue;
          if (p_.leq(w, v)) ++sig[v][1 + color[w]];
          if (p_.leq(v, w)) ++sig[v][1 + classes + color[w]];
        }
      }
      auto next = densify(sig);
      const std::size_t next_classes = *std::max_element(next.begin(), next.end()) + 1;
      if (next_classes == classes) return next;
      color = std::move(next);
      classes = next_classes;
    }
  }

  void search(std::vector<std::size_t> color) {
    if (n_ == 0) {
      best_ = "0:";
      return;
    }
    color = refine(std::move(color));
    std::map<std::size_t, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < n_; ++v) cells[color[v]].push_back(v);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto& c) { return c.second.size() > 1; });
    if (target == cells.end()) {
      std::vector<std::size_t> order(n_);
      for (std::size_t v = 0; v < n_; ++v) order[color[v]] = v;
      std::string bits(n_ * n_, '0');
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
          if (p_.leq(order[a], order[b])) bits[a * n_ + b] = '1';
      if (best_bits_.empty() || bits < best_bits_) {
        best_bits_ = std::move(bits);
        best_order_ = std::move(order);
        best_ = encode(best_bits_);
      }
      return;
    }
    const std::size_t c = target->first;
    for (std::size_t v : target->second) {
      std::vector<std::size_t> next = color;
      for (std::size_t w = 0; w < n_; ++w)
        if (color[w] > c || (color[w] == c && w != v)) ++next[w];
      search(std::move(next));
    }
  }

  std::string encode(const std::string& bits) const {
    static constexpr char hex[] = "0123456789abcdef";
    std::string out = std::to_string(n_) + ":";
    for (std::size_t k = 0; k < bits.size(); k += 4) {
      unsigned nibble = 0;
      for (std::size_t b = 0; b < 4; ++b)
        nibble = nibble << 1 | (k + b < bits.size() && bits[k + b] == '1');
      out += hex[nibble];
    }
    return out;
  }

  const FinitePoset& p_;
  std::size_t n_;
  std::string best_bits_;
  std::string best_;
  std::vector<std::size_t> best_order_;
};

}  // namespace detail

/// Isomorphism-invariant code of a finite poset: "<size>:<hex>" where the hex
/// digits pack the order matrix under a canonical labeling (the minimum over
/// the leaves of an individualization-refinement search).
inline std::string canonical_code(const FinitePoset& p) {
  return detail::CanonicalSearch(p).run().first;
}

/// Lattices are isomorphic exactly when their orders are, so the order code
/// serves.
inline std::string canonical_code(const FiniteLattice& l) { return canonical_code(l.poset()); }

/// Element order realizing the canonical code.
inline std::vector<std::size_t> canonical_order(const FinitePoset& p) {
  return detail::CanonicalSearch(p).run().second;
}

inline bool isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

}  // namespace latkit
