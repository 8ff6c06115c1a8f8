#include <gtest/gtest.h>

#include <set>

#include "latkit/canonical.hpp"
#include "latkit/completion.hpp"
#include "latkit/fixtures.hpp"
#include "support.hpp"

namespace latkit {
namespace {

using testing::brute_glb;
using testing::brute_lub;
using testing::relation_of;

TEST(BuildPoset, TwoChain) {
  auto p = build_poset({"0", "1"}, {{"0", "1"}});
  EXPECT_EQ(p.leq_matrix().count(), 3u);
  EXPECT_TRUE(p.leq(0, 1));
  EXPECT_FALSE(p.leq(1, 0));
  ASSERT_EQ(p.covers().size(), 1u);
}

TEST(BuildPoset, CycleIsNotAntisymmetric) {
  try {
    build_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL() << "expected failure";
  } catch (const LatticeCheckFailure& e) {
    EXPECT_EQ(e.kind(), CheckKind::not_antisymmetric);
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"a", "b"}));
  }
}

TEST(BuildPoset, UnknownAndDuplicateIds) {
  try {
    build_poset({"a"}, {{"a", "q"}});
    FAIL();
  } catch (const LatticeCheckFailure& e) {
    EXPECT_EQ(e.kind(), CheckKind::unknown_id);
    EXPECT_EQ(e.witness(), std::vector<std::string>{"q"});
  }
  EXPECT_THROW(build_poset({"a", "a"}, {}), LatticeCheckFailure);
}

TEST(BuildPoset, M3OrderAndCoversAreTransitiveReduction) {
  auto p = build_poset({"0", "a", "b", "c", "1"},
                       {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"},
                        {"0", "1"}});  // redundant edge is dropped
  EXPECT_EQ(p.covers().size(), 6u);
  EXPECT_TRUE(p.leq(p.index("0"), p.index("1")));
  EXPECT_FALSE(p.comparable(p.index("a"), p.index("b")));
}

TEST(BuildPoset, FromRelationReportsTransitivityWitness) {
  BitMatrix r(3);
  for (std::size_t i = 0; i < 3; ++i) r.set(i, i);
  r.set(0, 1);
  r.set(1, 2);
  try {
    FinitePoset::from_relation({"x", "y", "z"}, r);
    FAIL();
  } catch (const LatticeCheckFailure& e) {
    EXPECT_EQ(e.kind(), CheckKind::not_transitive);
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"x", "y", "z"}));
  }
}

TEST(LatticeFromPoset, M3MeetJoin) {
  auto l = fixtures::m3();
  const auto a = l.index("a"), b = l.index("b");
  EXPECT_EQ(l.id(l.meet(a, b)), "0");
  EXPECT_EQ(l.id(l.join(a, b)), "1");
  EXPECT_EQ(l.id(l.bottom()), "0");
  EXPECT_EQ(l.id(l.top()), "1");
}

TEST(LatticeFromPoset, AntichainHasNoJoin) {
  try {
    lattice_from_poset(fixtures::antichain(2));
    FAIL();
  } catch (const LatticeCheckFailure& e) {
    EXPECT_EQ(e.kind(), CheckKind::no_join);
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"a", "b"}));
  }
}

TEST(LatticeFromPoset, BowtieHasNoJoin) {
  auto p = build_poset({"0", "a", "b", "1", "1'"},
                       {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}, {"a", "1'"}, {"b", "1'"}});
  // Oracle: the upper bounds of {a, b} are {1, 1'} and neither is below the other.
  const auto rel = relation_of(p);
  EXPECT_FALSE(brute_lub(rel, p.index("a"), p.index("b")).has_value());
  try {
    lattice_from_poset(p);
    FAIL();
  } catch (const LatticeCheckFailure& e) {
    EXPECT_EQ(e.kind(), CheckKind::no_join);
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"a", "b"}));
  }
}

TEST(LatticeFromPoset, TablesAgreeWithBruteForceBounds) {
  auto& g = testing::rng();
  for (int trial = 0; trial < 30; ++trial) {
    auto l = testing::random_lattice(6, g);
    const auto rel = relation_of(l.poset());
    for (std::size_t x = 0; x < l.size(); ++x)
      for (std::size_t y = 0; y < l.size(); ++y) {
        ASSERT_EQ(brute_lub(rel, x, y), l.join(x, y));
        ASSERT_EQ(brute_glb(rel, x, y), l.meet(x, y));
      }
  }
}

TEST(LatticeFromPoset, AxiomsHoldOnRandomLattices) {
  auto& g = testing::rng();
  for (int trial = 0; trial < 30; ++trial) {
    auto l = testing::random_lattice(7, g);
    const std::size_t n = l.size();
    for (std::size_t x = 0; x < n; ++x) {
      ASSERT_TRUE(l.leq(l.bottom(), x));
      ASSERT_TRUE(l.leq(x, l.top()));
      for (std::size_t y = 0; y < n; ++y) {
        ASSERT_EQ(l.meet(x, y), l.meet(y, x));
        ASSERT_EQ(l.join(x, l.meet(x, y)), x);
        ASSERT_EQ(l.meet(x, l.join(x, y)), x);
        for (std::size_t z = 0; z < n; ++z) {
          ASSERT_EQ(l.meet(x, l.meet(y, z)), l.meet(l.meet(x, y), z));
          ASSERT_EQ(l.join(x, l.join(y, z)), l.join(l.join(x, y), z));
        }
      }
    }
    // Round trip through the order alone reproduces the tables.
    ASSERT_EQ(lattice_from_poset(l.poset()), l);
  }
}

TEST(Interval, Examples) {
  auto m3 = fixtures::m3();
  EXPECT_EQ(interval(m3, "0", "1"), m3);
  auto lower = interval(m3, "0", "a");
  EXPECT_EQ(lower.size(), 2u);
  EXPECT_EQ(lower.id(lower.bottom()), "0");
  EXPECT_EQ(lower.id(lower.top()), "a");
  auto point = interval(fixtures::two_chain(), "1", "1");
  EXPECT_EQ(point.size(), 1u);
  EXPECT_EQ(point.bottom(), point.top());
  EXPECT_THROW(interval(m3, "a", "b"), Error);
}

TEST(SublatticeGenerated, Examples) {
  auto m3 = fixtures::m3();
  auto ab = sublattice_generated(m3, std::vector<std::string>{"a", "b"});
  EXPECT_EQ(ab.ids(), (std::vector<std::string>{"0", "a", "b", "1"}));
  EXPECT_TRUE(isomorphic(ab, fixtures::boolean(2)));
  EXPECT_EQ(sublattice_generated(m3, m3.ids()), m3);
  auto single = sublattice_generated(m3, std::vector<std::string>{"a"});
  EXPECT_EQ(single.ids(), std::vector<std::string>{"a"});
  EXPECT_THROW(sublattice_generated(m3, std::vector<std::size_t>{}), Error);
}

TEST(DirectProduct, Examples) {
  auto sq = direct_product(fixtures::two_chain(), fixtures::two_chain());
  EXPECT_TRUE(isomorphic(sq, fixtures::boolean(2)));
  auto one = fixtures::chain(1);
  EXPECT_TRUE(isomorphic(direct_product(fixtures::m3(), one), fixtures::m3()));
  auto ten = direct_product(fixtures::two_chain(), fixtures::m3());
  EXPECT_EQ(ten.size(), 10u);
  // The trusted product tables match a from-scratch computation on its order.
  EXPECT_EQ(lattice_from_poset(ten.poset()), ten);
}

TEST(DedekindMacNeille, AntichainCompletesToSquare) {
  auto c = dedekind_macneille(fixtures::antichain(2));
  // Oracle: the cuts are {}, {a}, {b}, {a,b}.
  EXPECT_EQ(c.lattice.size(), 4u);
  EXPECT_EQ(c.lattice.ids(), (std::vector<std::string>{"{}", "a", "b", "{a,b}"}));
  EXPECT_TRUE(isomorphic(c.lattice, fixtures::boolean(2)));
}

TEST(DedekindMacNeille, LatticesAndChainsAreFixed) {
  for (const auto& l : {fixtures::m3(), fixtures::n5(), fixtures::chain(3), fixtures::boolean(3)}) {
    auto c = dedekind_macneille(l.poset());
    EXPECT_TRUE(isomorphic(c.lattice, l));
    for (std::size_t i = 0; i < l.size(); ++i) EXPECT_EQ(c.lattice.id(c.embedding[i]), l.id(i));
  }
}

TEST(DedekindMacNeille, EverySubsetHasBoundsAndEmbeddingPreservesOps) {
  auto& g = testing::rng();
  for (int trial = 0; trial < 20; ++trial) {
    auto p = testing::random_poset(5, 0.3, g);
    auto c = dedekind_macneille(p);
    const auto& l = c.lattice;
    if (l.size() > 12) continue;
    const auto rel = relation_of(l.poset());
    const std::size_t n = l.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      // Brute-force: a least upper bound of the subset exists.
      std::vector<std::size_t> ub;
      for (std::size_t z = 0; z < n; ++z) {
        bool up = true;
        for (std::size_t x = 0; x < n; ++x)
          if (mask >> x & 1u) up = up && rel[x][z];
        if (up) ub.push_back(z);
      }
      bool has_least = false;
      for (auto u : ub)
        has_least = has_least || std::all_of(ub.begin(), ub.end(), [&](auto v) { return rel[u][v]; });
      ASSERT_TRUE(has_least);
    }
    // Existing joins and meets of p are preserved by the embedding.
    const auto prel = relation_of(p);
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (auto j = brute_lub(prel, x, y)) {
          ASSERT_EQ(l.join(c.embedding[x], c.embedding[y]), c.embedding[*j]);
        }
        if (auto m = brute_glb(prel, x, y)) {
          ASSERT_EQ(l.meet(c.embedding[x], c.embedding[y]), c.embedding[*m]);
        }
      }
  }
}

TEST(CanonicalCode, InvariantUnderRelabeling) {
  auto& g = testing::rng();
  std::vector<FiniteLattice> samples{fixtures::m3(), fixtures::n5(), fixtures::boolean(3),
                                     testing::random_lattice(7, g), testing::random_lattice(8, g)};
  for (const auto& l : samples) {
    const auto code = canonical_code(l);
    for (int k = 0; k < 50; ++k)
      ASSERT_EQ(canonical_code(relabel(l, testing::random_permutation(l.size(), g))), code);
  }
  EXPECT_NE(canonical_code(fixtures::m3()), canonical_code(fixtures::n5()));
}

TEST(CanonicalCode, FiveElementLatticesHaveFiveClasses) {
  // Oracle: every labeled partial order on 5 points, filtered for the lattice
  // property by enumeration, classified up to isomorphism by trying all
  // permutations.
  constexpr std::size_t n = 5;
  std::vector<std::vector<std::vector<bool>>> lattices;
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  for (std::size_t mask = 0; mask < (std::size_t{1} << off.size()); ++mask) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t k = 0; k < off.size(); ++k)
      if (mask >> k & 1u) r[off[k].first][off[k].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && r[i][j] && r[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (r[i][j] && r[j][k] && !r[i][k]) ok = false;
      }
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = brute_lub(r, i, j) && brute_glb(r, i, j);
    if (ok) lattices.push_back(std::move(r));
  }
  std::vector<std::vector<std::vector<bool>>> classes;
  for (const auto& r : lattices) {
    bool found = false;
    for (const auto& c : classes) found = found || testing::brute_isomorphic(r, c);
    if (!found) classes.push_back(r);
  }
  ASSERT_EQ(classes.size(), 5u);

  std::set<std::string> codes;
  for (const auto& r : lattices) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, r[i][j]);
    codes.insert(canonical_code(FinitePoset::from_relation({"a", "b", "c", "d", "e"}, m)));
  }
  EXPECT_EQ(codes.size(), 5u);
}

TEST(CanonicalCode, DistinguishesNonIsomorphicRandomLattices) {
  auto& g = testing::rng();
  std::vector<FiniteLattice> ls;
  for (int k = 0; k < 40; ++k) {
    auto l = testing::random_lattice(5, g, 8);
    ls.push_back(l);
  }
  for (std::size_t a = 0; a < ls.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      ASSERT_EQ(canonical_code(ls[a]) == canonical_code(ls[b]),
                testing::brute_isomorphic(relation_of(ls[a].poset()), relation_of(ls[b].poset())));
}

}  // namespace
}  // namespace latkit
