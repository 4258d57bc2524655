#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "polysat/construct.hpp"
#include "polysat/graphdual.hpp"
#include "random_posets.hpp"

namespace polysat {
namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (coin(rng)) g.add_edge(x, y);
  return g;
}

Graph complete(int n) { return complement(Graph(n)); }

std::vector<int> names_to_indices(const Poset& p, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& s : names) out.push_back(*p.find(s));
  return out;
}

TEST(ComparabilityGraph, Examples) {
  EXPECT_EQ(comparability_graph(Poset::chain(3)), complete(3));
  EXPECT_EQ(comparability_graph(Poset::antichain(2)).edge_count(), 0);
  EXPECT_EQ(comparability_graph(build_pj(1).poset), complete(3));
}

TEST(Complement, Involution) {
  EXPECT_EQ(complement(complete(3)).edge_count(), 0);
  EXPECT_EQ(complement(Graph(3)), complete(3));
  std::mt19937 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(1 + trial % 12, 0.4, rng);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(AlphaOmega, Cliques) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(alpha_k(complete(n), 1), 1);
    EXPECT_EQ(omega_k(complete(n), 1), n);
  }
}

TEST(AlphaOmega, P2) {
  Graph g = comparability_graph(build_pj(2).poset);
  EXPECT_EQ(omega_k(g, 1), 4);
  EXPECT_EQ(omega_k(g, 2), 6);
}

TEST(AlphaOmega, AlphaOfComparabilityGraphIsDk) {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 120; ++trial) {
    Poset p = testing::random_poset(1 + trial % 8, 0.1 + 0.1 * (trial % 6), rng);
    Graph g = comparability_graph(p);
    for (int k = 1; k <= height(p) + 1; ++k) EXPECT_EQ(alpha_k(g, k), dk(p, k));
  }
}

TEST(AlphaOmega, SizeLimit) {
  try {
    alpha_k(Graph(17), 1);
    FAIL() << "expected SizeLimitExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimitExceeded);
  }
}

TEST(Realizer, PjExamples) {
  Realizer r1 = pj_realizer(1);
  EXPECT_EQ(r1.ext1, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(r1.ext2, (std::vector<int>{0, 1, 2}));

  Pj p2 = build_pj(2);
  Realizer r2 = pj_realizer(2);
  EXPECT_EQ(r2.ext1, names_to_indices(p2.poset, {"u", "s1", "r1", "t2.1", "s2", "r2"}));
  EXPECT_EQ(r2.ext2, names_to_indices(p2.poset, {"t2.1", "u", "s1", "s2", "r2", "r1"}));

  for (int j = 1; j <= 6; ++j) EXPECT_TRUE(verify_realizer(build_pj(j).poset, pj_realizer(j))) << j;
}

TEST(Realizer, VerifyExamples) {
  EXPECT_TRUE(verify_realizer(Poset::chain(3), chain_realizer(3)));
  EXPECT_FALSE(verify_realizer(Poset::antichain(2), Realizer{{0, 1}, {0, 1}}));
  EXPECT_TRUE(verify_realizer(Poset::antichain(2), Realizer{{0, 1}, {1, 0}}));
  EXPECT_FALSE(verify_realizer(Poset::chain(2), Realizer{{0, 1}, {1, 0}}));
  EXPECT_FALSE(verify_realizer(Poset::chain(2), Realizer{{0, 1}, {0}}));
  BuiltPoset b = from_delta(DeltaSequence{{3, 3, 2, 1}});
  EXPECT_TRUE(verify_realizer(b.poset, b.realizer));
}

TEST(Realizer, UnionOfRealizers) {
  Poset p = build_pj(2).poset;
  Poset q = Poset::chain(3);
  Realizer r = union_realizer(pj_realizer(2), p.size(), chain_realizer(3));
  EXPECT_TRUE(verify_realizer(disjoint_union(p, q), r));
}

TEST(Conjugate, Examples) {
  Conjugate chain = conjugate(Poset::chain(3), chain_realizer(3));
  EXPECT_EQ(chain.poset, Poset::antichain(3));
  Conjugate anti = conjugate(Poset::antichain(4), Realizer{{0, 1, 2, 3}, {3, 2, 1, 0}});
  EXPECT_EQ(anti.poset, Poset::chain(4));
  try {
    conjugate(Poset::antichain(2), Realizer{{0, 1}, {0, 1}});
    FAIL() << "expected InvalidRealizer";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidRealizer);
  }
}

TEST(Conjugate, ComplementsTheComparabilityGraph) {
  for (int j = 1; j <= 4; ++j) {
    Poset p = build_pj(j).poset;
    Conjugate conj = conjugate(p, pj_realizer(j));
    Graph g = complement(comparability_graph(p));
    // Bring conj back to the original indexing before comparing.
    Graph back(p.size());
    for (int x = 0; x < p.size(); ++x)
      for (int y = x + 1; y < p.size(); ++y)
        if (conj.poset.comparable(conj.index_of[x], conj.index_of[y])) back.add_edge(x, y);
    EXPECT_EQ(back, g) << j;
    EXPECT_TRUE(verify_realizer(conj.poset, conj.realizer));
  }
}

TEST(Conjugate, IsAnInvolutionUpToIsomorphism) {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    auto d2 = testing::random_dim2_poset(1 + trial % 9, rng);
    std::vector<int> id(d2.poset.size());
    std::iota(id.begin(), id.end(), 0);
    Realizer r{id, d2.second};
    ASSERT_TRUE(verify_realizer(d2.poset, r));
    Conjugate once = conjugate(d2.poset, r);
    Conjugate twice = conjugate(once.poset, once.realizer);
    EXPECT_TRUE(isomorphic(twice.poset, d2.poset));
  }
}

TEST(Conjugate, OmegaOfComparabilityGraphIsDkOfConjugate) {
  Poset p2 = build_pj(2).poset;
  Conjugate c2 = conjugate(p2, pj_realizer(2));
  Graph g2 = comparability_graph(p2);
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(omega_k(g2, k), dk(c2.poset, k));

  std::mt19937 rng(83);
  for (int trial = 0; trial < 80; ++trial) {
    auto d2 = testing::random_dim2_poset(1 + trial % 8, rng);
    std::vector<int> id(d2.poset.size());
    std::iota(id.begin(), id.end(), 0);
    Conjugate conj = conjugate(d2.poset, Realizer{id, d2.second});
    Graph g = comparability_graph(d2.poset);
    for (int k = 1; k <= d2.poset.size(); ++k) EXPECT_EQ(omega_k(g, k), dk(conj.poset, k));
  }
}

// Chain partitions of the conjugate are exactly the partitions of P into
// antichains, i.e. proper colourings of G(P) up to colour names.
TEST(Conjugate, ColouringsMatchChainPartitions) {
  std::mt19937 rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    auto d2 = testing::random_dim2_poset(1 + trial % 6, rng);
    const Poset& p = d2.poset;
    std::vector<int> id(p.size());
    std::iota(id.begin(), id.end(), 0);
    Conjugate conj = conjugate(p, Realizer{id, d2.second});
    long long colourings = 0;
    for (const auto& blocks : oracle::set_partitions(p.size())) {
      bool ok = true;
      for (const auto& b : blocks) ok = ok && is_antichain(p, b);
      colourings += ok ? 1 : 0;
    }
    EXPECT_EQ(colourings, oracle::count_chain_partitions(conj.poset));
  }
}

TEST(CoPolyunsaturated, Examples) {
  PolyunsatReport p2 = is_co_polyunsaturated(build_pj(2).poset, pj_realizer(2));
  EXPECT_EQ(p2.height, 2);
  EXPECT_TRUE(p2.polyunsaturated);

  PolyunsatReport chain = is_co_polyunsaturated(Poset::chain(4), chain_realizer(4));
  EXPECT_EQ(chain.height, 1);
  EXPECT_TRUE(chain.polyunsaturated);

  // Conjugating the conjugate of from_delta's output gives back a
  // polyunsaturated poset with the prescribed Δ-sequence.
  BuiltPoset b = from_delta(DeltaSequence{{2, 2, 1, 1}});
  Conjugate conj = conjugate(b.poset, b.realizer);
  PolyunsatReport back = is_co_polyunsaturated(conj.poset, conj.realizer);
  EXPECT_TRUE(back.polyunsaturated);
  EXPECT_EQ(back.height, 4);
  EXPECT_EQ(back.d, (std::vector<int>{2, 4, 5, 6}));
}

TEST(CoPolyunsaturated, RejectsBadRealizer) {
  EXPECT_THROW(is_co_polyunsaturated(Poset::antichain(2), Realizer{{0, 1}, {0, 1}}), Error);
}

TEST(DualFeasibility, Examples) {
  EXPECT_EQ(feasible_dual_nac(6, 4, 2).feasible, feasible_nca(6, 4, 2).feasible);
  EXPECT_TRUE(feasible_dual_nac(10, 5, 3).feasible);
  FeasibilityVerdict v = feasible_dual_nac(7, 4, 2);
  EXPECT_FALSE(v.feasible);
  EXPECT_EQ(v.failed_conditions, (std::vector<std::string>{"n_upper"}));
  EXPECT_EQ(feasible_dual_nac(4, 5, 2).failed_conditions,
            (std::vector<std::string>{"c_ge_a_minus_2", "n_lower"}));
  EXPECT_THROW(feasible_dual_nac(5, 2, 2), Error);
}

TEST(DualFeasibility, SwapsRolesOfHeightAndWidth) {
  for (int a = 3; a <= 7; ++a)
    for (int c = 1; c <= 8; ++c)
      for (int n = 1; n <= 40; ++n)
        EXPECT_EQ(feasible_dual_nac(n, a, c).feasible, feasible_nca(n, a, c).feasible);
}

TEST(ComparabilityOracle, ComplementOfP2IsComparability) {
  Graph g = comparability_graph(build_pj(2).poset);
  EXPECT_TRUE(oracle::is_comparability_graph(g));
  EXPECT_TRUE(oracle::is_comparability_graph(complement(g)));
  // The 5-cycle is not a comparability graph.
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  EXPECT_FALSE(oracle::is_comparability_graph(c5));
}

}  // namespace
}  // namespace polysat
