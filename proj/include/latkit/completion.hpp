#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace latkit {

struct Completion {
  FiniteLattice lattice;
  /// embedding[i] is the index of the principal cut of poset element i.
  std::vector<std::size_t> embedding;
};

/// Dedekind-MacNeille completion: the cuts A = L(U(A)) of `p` ordered by
/// inclusion. The cuts are exactly the intersections of principal down-sets
/// (the empty family giving the whole ground set).
///
/// A cut equal to a principal down-set keeps that element's id; any other
/// cut is named by its maximal elements, e.g. "{a,b}" or "{}".
inline Completion dedekind_macneille(const FinitePoset& p) {
  const std::size_t n = p.size();
  BitSet all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);

  std::set<BitSet> seen{all};
  std::vector<BitSet> cuts{all};
  for (std::size_t i = 0; i < n; ++i)
    if (seen.insert(p.down_set(i)).second) cuts.push_back(p.down_set(i));
  for (std::size_t a = 0; a < cuts.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      BitSet c = cuts[a] & cuts[b];
      if (seen.insert(c).second) cuts.push_back(std::move(c));
    }

  std::sort(cuts.begin(), cuts.end(), [](const BitSet& x, const BitSet& y) {
    const auto cx = x.count(), cy = y.count();
    return cx != cy ? cx < cy : x < y;
  });

  const std::size_t m = cuts.size();
  std::vector<std::string> ids(m);
  std::vector<std::size_t> embedding(n);
  for (std::size_t c = 0; c < m; ++c) {
    bool principal = false;
    for (std::size_t i = 0; i < n; ++i)
      if (cuts[c] == p.down_set(i)) {
        ids[c] = p.id(i);
        embedding[i] = c;
        principal = true;
      }
    if (principal) continue;
    std::string name = "{";
    bool first = true;
    cuts[c].for_each([&](std::size_t i) {
      bool maximal = true;
      cuts[c].for_each([&](std::size_t j) { maximal = maximal && !p.lt(i, j); });
      if (!maximal) return;
      if (!first) name += ",";
      name += p.id(i);
      first = false;
    });
    ids[c] = name + "}";
  }

  BitMatrix leq(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (cuts[a].is_subset_of(cuts[b])) leq.set(a, b);
  return {lattice_from_poset(FinitePoset::from_relation(std::move(ids), std::move(leq))),
          std::move(embedding)};
}

}  // namespace latkit
