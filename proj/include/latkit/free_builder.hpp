#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "fixtures.hpp"
#include "lattice.hpp"
#include "term.hpp"

namespace latkit {

/// One coordinate of an evaluation vector: a family member and an assignment
/// of the generators into it.
struct EvaluationCoordinate {
  std::size_t member = 0;
  std::vector<std::size_t> assignment;
};

/// A finitely generated lattice built as the closure of the generator
/// evaluation vectors under pointwise meet and join.
struct EvaluationClosure {
  std::size_t generators = 0;
  std::vector<FiniteLattice> family;
  std::vector<EvaluationCoordinate> coordinates;
  /// Per element: its evaluation vector and a term that produces it.
  std::vector<std::u16string> vectors;
  std::vector<LatticeTerm> terms;
  /// Element index of generator x(k+1).
  std::vector<std::size_t> generator_elements;
  FiniteLattice lattice;

  /// Element reached by a free term over x1..xn.
  std::size_t element_of(const LatticeTerm& t) const { return evaluate(t, lattice, generator_elements); }

  /// Pointwise evaluation of a term, straight from the family (no lattice
  /// tables involved).
  std::u16string vector_of(const LatticeTerm& t) const {
    std::u16string out(coordinates.size(), u'\0');
    for (std::size_t c = 0; c < coordinates.size(); ++c)
      out[c] = static_cast<char16_t>(
          evaluate(t, family[coordinates[c].member], coordinates[c].assignment));
    return out;
  }
};

namespace detail {

// Lower-triangular results: row k holds k ^ i (resp. k v i) for i <= k.
struct ClosureTables {
  std::vector<std::vector<std::uint16_t>> meet, join;
};

// Worklist closure of `gens` under two binary operations on keys. Each new
// key is combined with every earlier one when its turn comes; returns the
// keys in discovery order with a witnessing term for each.
template <class Key, class Meet, class Join>
std::vector<Key> close(const std::vector<Key>& gens, Meet meet, Join join, std::uint64_t budget,
                       std::vector<LatticeTerm>& terms, std::vector<std::size_t>& generator_elements,
                       ClosureTables& tables) {
  std::vector<Key> keys;
  std::unordered_map<Key, std::uint32_t> index;
  index.reserve(4096);
  auto intern = [&](const Key& v, const auto& make_term) -> std::size_t {
    if (auto it = index.find(v); it != index.end()) return it->second;
    if (keys.size() >= FiniteLattice::max_size)
      throw BudgetExceeded("closure exceeds " + std::to_string(FiniteLattice::max_size) + " elements");
    const auto id = static_cast<std::uint32_t>(keys.size());
    index.emplace(v, id);
    keys.push_back(v);
    terms.push_back(make_term());
    return id;
  };
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto name = "x" + std::to_string(k + 1);
    generator_elements.push_back(intern(gens[k], [&] { return LatticeTerm::var(name); }));
  }
  std::uint64_t spent = 0;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    tables.meet.emplace_back(k + 1);
    tables.join.emplace_back(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      if (++spent > budget) throw BudgetExceeded("closure exceeded budget of " + std::to_string(budget));
      // Computed before interning, which may grow `keys`.
      Key m = meet(keys[i], keys[k]);
      Key j = join(keys[i], keys[k]);
      tables.meet[k][i] = static_cast<std::uint16_t>(intern(m, [&] { return terms[i] & terms[k]; }));
      tables.join[k][i] = static_cast<std::uint16_t>(intern(j, [&] { return terms[i] | terms[k]; }));
    }
  }
  return keys;
}

inline std::string vector_id(const std::u16string& v, bool digits) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!digits && i) out += '.';
    out += std::to_string(static_cast<unsigned>(v[i]));
  }
  return out;
}

}  // namespace detail

/// Free lattice on n generators in the variety generated by `family`,
/// provided the family separates it. Budget caps meet/join pair evaluations.
inline EvaluationClosure free_in_family(std::size_t n, std::vector<FiniteLattice> family,
                                        std::uint64_t budget = 100'000'000) {
  if (n == 0) throw Error("need at least one generator");
  if (family.empty()) throw Error("empty lattice family");
  EvaluationClosure ec;
  ec.generators = n;
  ec.family = std::move(family);
  bool digits = true;
  for (std::size_t m = 0; m < ec.family.size(); ++m) {
    const std::size_t size = ec.family[m].size();
    digits = digits && size <= 10;
    double count = 1;
    for (std::size_t k = 0; k < n; ++k) count *= static_cast<double>(size);
    if (count * static_cast<double>(ec.family.size()) > 1e6) throw BudgetExceeded("too many assignments");
    std::vector<std::size_t> a(n, 0);
    while (true) {
      ec.coordinates.push_back({m, a});
      std::size_t k = n;
      while (k > 0 && ++a[k - 1] == size) a[--k] = 0;
      if (k == 0) break;
    }
  }
  const std::size_t width = ec.coordinates.size();

  std::vector<std::u16string> gens;
  for (std::size_t k = 0; k < n; ++k) {
    std::u16string v(width, u'\0');
    for (std::size_t c = 0; c < width; ++c) v[c] = static_cast<char16_t>(ec.coordinates[c].assignment[k]);
    gens.push_back(std::move(v));
  }

  detail::ClosureTables tables;
  const bool two_valued =
      width <= 64 && std::all_of(ec.family.begin(), ec.family.end(), [](const auto& l) { return l.size() == 2; });
  if (two_valued) {
    // Every coordinate is two-valued: pack a vector into one word, with bit c
    // set when coordinate c is the member's top.
    auto pack = [&](const std::u16string& v) {
      std::uint64_t w = 0;
      for (std::size_t c = 0; c < width; ++c)
        if (v[c] == ec.family[ec.coordinates[c].member].top()) w |= std::uint64_t{1} << c;
      return w;
    };
    std::vector<std::uint64_t> packed;
    for (const auto& g : gens) packed.push_back(pack(g));
    auto keys = detail::close<std::uint64_t>(
        packed, [](std::uint64_t x, std::uint64_t y) { return x & y; },
        [](std::uint64_t x, std::uint64_t y) { return x | y; }, budget, ec.terms, ec.generator_elements, tables);
    for (auto w : keys) {
      std::u16string v(width, u'\0');
      for (std::size_t c = 0; c < width; ++c) {
        const auto& l = ec.family[ec.coordinates[c].member];
        v[c] = static_cast<char16_t>(w >> c & 1u ? l.top() : l.bottom());
      }
      ec.vectors.push_back(std::move(v));
    }
  } else {
    std::vector<const FiniteLattice*> member_of;
    for (const auto& c : ec.coordinates) member_of.push_back(&ec.family[c.member]);
    auto pointwise = [&](bool is_meet) {
      return [&, is_meet](const std::u16string& a, const std::u16string& b) {
        std::u16string out(width, u'\0');
        for (std::size_t c = 0; c < width; ++c)
          out[c] = static_cast<char16_t>(is_meet ? member_of[c]->meet(a[c], b[c]) : member_of[c]->join(a[c], b[c]));
        return out;
      };
    };
    ec.vectors = detail::close<std::u16string>(gens, pointwise(true), pointwise(false), budget, ec.terms,
                                               ec.generator_elements, tables);
  }
  auto& tri_meet = tables.meet;
  auto& tri_join = tables.join;

  const std::size_t size = ec.vectors.size();
  std::vector<FiniteLattice::entry> meet(size * size), join(size * size);
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      meet[k * size + i] = meet[i * size + k] = tri_meet[k][i];
      join[k * size + i] = join[i * size + k] = tri_join[k][i];
    }
    std::vector<std::uint16_t>().swap(tri_meet[k]);
    std::vector<std::uint16_t>().swap(tri_join[k]);
  }
  BitMatrix rel(size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (meet[a * size + b] == a) rel.set(a, b);
  std::vector<std::string> ids;
  for (const auto& v : ec.vectors) ids.push_back(detail::vector_id(v, digits));
  ec.lattice = FiniteLattice::from_tables(FinitePoset::from_relation_unchecked(std::move(ids), std::move(rel)),
                                          std::move(meet), std::move(join));
  return ec;
}

/// FD(n): the closure over all two-valued assignments. Element terms are the
/// disjunctive normal forms of the corresponding monotone Boolean functions.
inline EvaluationClosure free_distributive(std::size_t n, std::uint64_t budget = 100'000'000) {
  if (n > 5) throw BudgetExceeded("FD(" + std::to_string(n) + ") is beyond the table size limit");
  auto ec = free_in_family(n, {fixtures::two_chain()}, budget);
  const std::size_t points = ec.coordinates.size();
  std::vector<std::uint32_t> mask(points);
  for (std::size_t c = 0; c < points; ++c)
    for (std::size_t k = 0; k < n; ++k)
      if (ec.coordinates[c].assignment[k]) mask[c] |= 1u << k;
  for (std::size_t e = 0; e < ec.vectors.size(); ++e) {
    std::vector<LatticeTerm> joinands;
    for (std::size_t c = 0; c < points; ++c) {
      if (!ec.vectors[e][c]) continue;
      bool minimal = true;
      for (std::size_t d = 0; d < points && minimal; ++d)
        minimal = !(d != c && ec.vectors[e][d] && (mask[d] & mask[c]) == mask[d]);
      if (!minimal) continue;
      std::vector<LatticeTerm> meetands;
      for (std::size_t k = 0; k < n; ++k)
        if (mask[c] >> k & 1u) meetands.push_back(LatticeTerm::var("x" + std::to_string(k + 1)));
      joinands.push_back(LatticeTerm::meet(std::move(meetands)));
    }
    ec.terms[e] = LatticeTerm::join(std::move(joinands));
  }
  return ec;
}

/// |FD(n)| without building it: the number of monotone Boolean functions on n
/// variables minus the two constants. M(n) counts pairs f <= g of monotone
/// functions on n - 1 variables, which stays cheap through n = 6.
inline std::uint64_t free_distributive_size(std::size_t n) {
  if (n == 0 || n > 6) throw Error("free_distributive_size supports 1 <= n <= 6");
  // Monotone functions on m variables as truth tables in a 64-bit word.
  std::vector<std::uint64_t> fs{0, 1};  // m = 0: constants 0 and 1
  for (std::size_t m = 1; m < n; ++m) {
    const std::size_t half = std::size_t{1} << (m - 1);
    std::vector<std::uint64_t> next;
    for (auto f : fs)
      for (auto g : fs)
        if ((f & ~g) == 0) next.push_back(f | g << half);
    fs = std::move(next);
  }
  std::uint64_t pairs = 0;
  for (auto f : fs)
    for (auto g : fs) pairs += (f & ~g) == 0;
  return pairs - 2;
}

/// FM(3) as the closure over the family {2-chain, M3}. The result is a
/// 3-generated modular lattice, so at most 28 elements; reaching 28 certifies
/// it is FM(3).
inline EvaluationClosure free_modular_3() {
  auto ec = free_in_family(3, {fixtures::two_chain(), fixtures::m3()});
  if (ec.lattice.size() != 28)
    throw Error("internal consistency failure: FM(3) closure has " + std::to_string(ec.lattice.size()) +
                " elements, expected 28");
  return ec;
}

/// Image of the closure under projection onto the coordinates of the chosen
/// family members. The projection is a homomorphism, so the image is a
/// lattice; `map` sends each element to its image.
struct Projection {
  FiniteLattice image;
  std::vector<std::size_t> map;
};

inline Projection project_onto_members(const EvaluationClosure& ec, const std::vector<std::size_t>& members) {
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < ec.coordinates.size(); ++c)
    if (std::find(members.begin(), members.end(), ec.coordinates[c].member) != members.end()) keep.push_back(c);
  std::unordered_map<std::u16string, std::size_t> index;
  std::vector<std::size_t> rep;
  Projection p;
  for (std::size_t e = 0; e < ec.vectors.size(); ++e) {
    std::u16string v;
    for (auto c : keep) v.push_back(ec.vectors[e][c]);
    auto [it, fresh] = index.emplace(v, rep.size());
    if (fresh) rep.push_back(e);
    p.map.push_back(it->second);
  }
  const std::size_t k = rep.size();
  std::vector<FiniteLattice::entry> meet(k * k), join(k * k);
  BitMatrix rel(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      meet[a * k + b] = static_cast<FiniteLattice::entry>(p.map[ec.lattice.meet(rep[a], rep[b])]);
      join[a * k + b] = static_cast<FiniteLattice::entry>(p.map[ec.lattice.join(rep[a], rep[b])]);
      if (meet[a * k + b] == a) rel.set(a, b);
    }
  std::vector<std::string> ids;
  for (auto e : rep) ids.push_back(ec.lattice.id(e));
  p.image = FiniteLattice::from_tables(FinitePoset::from_relation_unchecked(std::move(ids), std::move(rel)),
                                       std::move(meet), std::move(join));
  return p;
}

namespace legends {

/// Element terms of the 28-element free modular lattice on 1, 2, 3, keyed by
/// the diagram's letters, plus the generators and the bounds. Entry "p" reads
/// 1 ^ 2 in the source legend, repeating "o"; 1 ^ 3 is the only missing
/// meet of two generators, so that is used.
inline std::vector<std::pair<std::string, std::string>> free_modular_3() {
  return {{"1", "x1"},
          {"2", "x2"},
          {"3", "x3"},
          {"0", "x1 ^ x2 ^ x3"},
          {"I", "x1 v x2 v x3"},
          {"a", "x1 v x2"},
          {"b", "x1 v x3"},
          {"c", "x2 v x3"},
          {"d", "(x1 v x2) ^ (x1 v x3)"},
          {"e", "(x1 v x2) ^ (x2 v x3)"},
          {"f", "(x1 v x3) ^ (x2 v x3)"},
          {"g", "x1 v (x2 ^ x3)"},
          {"h", "x2 v (x1 ^ x3)"},
          {"i", "x1 ^ (x2 v x3)"},
          {"j", "x2 ^ (x1 v x3)"},
          {"k", "x3 ^ (x1 v x2)"},
          {"l", "(x1 ^ x2) v (x1 ^ x3)"},
          {"m", "(x1 ^ x2) v (x2 ^ x3)"},
          {"n", "(x1 ^ x3) v (x2 ^ x3)"},
          {"o", "x1 ^ x2"},
          {"p", "x1 ^ x3"},
          {"q", "x2 ^ x3"},
          {"r", "(x1 ^ (x2 v x3)) v (x2 ^ x3)"},
          {"s", "(x2 ^ (x1 v x3)) v (x1 ^ x3)"},
          {"t", "(x3 ^ (x1 v x2)) v (x1 ^ x2)"},
          {"u", "(x1 ^ x2) v (x2 ^ x3) v (x1 ^ x3)"},
          {"v", "(x1 v x2) ^ (x2 v x3) ^ (x1 v x3)"},
          {"w", "x3 v (x1 ^ x2)"}};
}

/// The 18-element free distributive lattice's legend. Entry "i" reads
/// 2 v (1 ^ 3) in the source, repeating "e"; its position among the meets
/// h, j makes 2 ^ (1 v 3) the intended element.
inline std::vector<std::pair<std::string, std::string>> free_distributive_3() {
  return {{"1", "x1"},
          {"2", "x2"},
          {"3", "x3"},
          {"0", "x1 ^ x2 ^ x3"},
          {"I", "x1 v x2 v x3"},
          {"a", "x1 v x2"},
          {"b", "x1 v x3"},
          {"c", "x2 v x3"},
          {"d", "x1 v (x2 ^ x3)"},
          {"e", "x2 v (x1 ^ x3)"},
          {"f", "x3 v (x1 ^ x2)"},
          {"g", "(x1 ^ x2) v (x1 ^ x3) v (x2 ^ x3)"},
          {"h", "x1 ^ (x2 v x3)"},
          {"i", "x2 ^ (x1 v x3)"},
          {"j", "x3 ^ (x1 v x2)"},
          {"k", "x1 ^ x2"},
          {"l", "x1 ^ x3"},
          {"m", "x2 ^ x3"}};
}

}  // namespace legends

}  // namespace latkit
