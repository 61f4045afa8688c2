#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "unigraph/oracle.hpp"
#include "unigraph/params.hpp"
#include "unigraph/split.hpp"
#include "unigraph/verify.hpp"

namespace unigraph {
namespace {

using testing::seq;

Graph cycle(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, e);
}
Graph path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}
Graph complete(Vertex n) { return complement_graph(Graph(n)); }
Graph matching(Vertex m) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < m; ++i) e.push_back({2 * i, 2 * i + 1});
  return Graph::from_edges(2 * m, e);
}
Graph star(Vertex leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_edges(leaves + 1, e);
}
Graph threshold() {
  const std::vector<Edge> e{{3, 0}, {3, 1}, {3, 2}, {3, 4}, {4, 0}, {4, 1}, {4, 2}};
  return Graph::from_edges(5, e);
}

TEST(Realizations, Counts) {
  EXPECT_EQ(oracle::enumerate_realizations(seq("1^2")).size(), 1u);
  const auto c5 = oracle::enumerate_realizations(seq("2^5"));
  EXPECT_EQ(c5.size(), 12u);
  for (const auto& g : c5) EXPECT_TRUE(oracle::isomorphic(g, cycle(5)));
  EXPECT_TRUE(oracle::enumerate_realizations(seq("3^3,1")).empty());
}

TEST(Realizations, TwinMergingKeepsEveryClass) {
  verify::for_each_graphical(7, [](const DegreeSequence& s) {
    std::set<oracle::CanonicalForm> full;
    oracle::for_each_realization(s, [&](const Graph& g) {
      EXPECT_EQ(degree_sequence_of(g), s);
      full.insert(oracle::canonical_form(g));
      return true;
    });
    EXPECT_EQ(static_cast<Count>(full.size()), oracle::count_isomorphism_classes(s)) << to_string(s);
    return true;
  });
}

TEST(Realizations, SizeGuard) {
  EXPECT_THROW(oracle::enumerate_realizations(DegreeSequence::from_runs({{0, 11}})), Error);
}

TEST(Canonical, Examples) {
  EXPECT_EQ(oracle::canonical_form(cycle(5)), oracle::canonical_form(complement_graph(cycle(5))));
  EXPECT_NE(oracle::canonical_form(complete(3)), oracle::canonical_form(path(3)));
  const std::vector<Edge> t1{{0, 1}, {1, 2}, {1, 3}, {3, 4}};
  const std::vector<Edge> t2{{4, 2}, {2, 0}, {2, 1}, {1, 3}};
  EXPECT_TRUE(oracle::isomorphic(Graph::from_edges(5, t1), Graph::from_edges(5, t2)));
  EXPECT_FALSE(oracle::isomorphic(cycle(6), matching(3)));
  EXPECT_THROW(oracle::canonical_form(Graph(11)), Error);
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(5);
  verify::for_each_graphical(8, [&](const DegreeSequence& s) {
    const Graph g = realize(s);
    const Graph h = testing::relabel(g, testing::shuffled_ids(g.order(), rng));
    EXPECT_EQ(oracle::canonical_form(g), oracle::canonical_form(h)) << to_string(s);
    return true;
  });
}

TEST(Classes, Examples) {
  EXPECT_EQ(oracle::count_isomorphism_classes(seq("2^8")), 3);
  EXPECT_EQ(oracle::count_isomorphism_classes(seq("2^5")), 1);
  EXPECT_EQ(oracle::count_isomorphism_classes(seq("3,2,1^3")), 1);
  EXPECT_EQ(oracle::count_isomorphism_classes(seq("2^6")), 2);
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(oracle::automorphisms(cycle(5)).size(), 10u);
  EXPECT_EQ(oracle::count_automorphisms(cycle(5)), 10);
  // Smallest asymmetric tree: spider with legs 1, 2, 3.
  const std::vector<Edge> e{{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}};
  const Graph rigid = Graph::from_edges(7, e);
  EXPECT_EQ(oracle::count_automorphisms(rigid), 1);
  EXPECT_EQ(oracle::count_automorphisms(threshold()), 12);
  EXPECT_EQ(oracle::count_automorphisms(Graph(6)), 720);
  for (const auto& p : oracle::automorphisms(threshold())) {
    EXPECT_TRUE(oracle::is_automorphism(threshold(), p));
  }
  EXPECT_FALSE(oracle::is_automorphism(path(3), {{1, 0, 2}}));
  EXPECT_FALSE(oracle::is_automorphism(path(3), {{0, 0, 2}}));
}

TEST(Automorphisms, CountMatchesListAndBruteForce) {
  verify::for_each_graphical(6, [](const DegreeSequence& s) {
    const Graph g = realize(s);
    std::vector<Vertex> perm(g.order());
    for (Vertex i = 0; i < g.order(); ++i) perm[i] = i;
    Count brute = 0;
    do {
      brute += oracle::is_automorphism(g, {perm}) ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(oracle::count_automorphisms(g), brute) << to_string(s);
    EXPECT_EQ(static_cast<Count>(oracle::automorphisms(g).size()), brute);
    return true;
  });
}

TEST(BruteParams, Examples) {
  EXPECT_EQ(oracle::brute_params(cycle(5)), (oracle::BruteParams{2, 2, 3, 3}));
  EXPECT_EQ(oracle::brute_fix(cycle(5)), 2);
  EXPECT_EQ(oracle::brute_dist(path(4)), 2);
  EXPECT_EQ(oracle::brute_dist(Graph(0)), 0);
  EXPECT_EQ(oracle::brute_fix(Graph(1)), 0);
  EXPECT_EQ(oracle::brute_params(Graph(0)), (oracle::BruteParams{}));
  EXPECT_TRUE(oracle::is_split_graph(path(4)));
  EXPECT_FALSE(oracle::is_split_graph(cycle(4)));
  EXPECT_THROW(oracle::brute_fix(Graph(10)), Error);
}

TEST(BruteParams, FixingAnchors) {
  for (Vertex n = 3; n <= 8; ++n) EXPECT_EQ(oracle::brute_fix(cycle(n)), 2) << n;
  for (Vertex m = 1; m <= 4; ++m) EXPECT_EQ(oracle::brute_fix(matching(m)), m) << m;
  for (Vertex l = 2; l <= 7; ++l) EXPECT_EQ(oracle::brute_fix(star(l)), l - 1) << l;
  for (Vertex n = 1; n <= 8; ++n) EXPECT_EQ(oracle::brute_fix(complete(n)), n - 1) << n;
}

TEST(BruteParams, DistAtMostFixPlusOne) {
  verify::for_each_graphical(7, [](const DegreeSequence& s) {
    const Graph g = realize(s);
    EXPECT_LE(oracle::brute_dist(g), oracle::brute_fix(g) + 1) << to_string(s);
    return true;
  });
}

// For a split head (G, A, B) composed over H, an automorphism sending a
// head vertex u into H needs u to be a swing vertex of G, and its image
// must be dominant in H (u in A) or isolated in H (u in B).
TEST(AutomorphismStructure, HeadToTailNeedsSwingAndExtremeVertex) {
  std::vector<std::pair<Graph, VertexPartition>> heads;
  verify::for_each_graphical(4, [&](const DegreeSequence& s) {
    const SplitClass sc = determine_split(s);
    if (!sc.is_split() || s.size() == 0) return true;
    const Graph g = realize(s);
    const Vertex n = g.order();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      VertexPartition part;
      for (Vertex v = 0; v < n; ++v) ((mask >> v) & 1u ? part.k_set : part.s_set).push_back(v);
      if (is_ks_partition(g, part)) heads.push_back({g, part});
    }
    return true;
  });
  std::vector<Graph> tails;
  verify::for_each_graphical(4, [&](const DegreeSequence& s) {
    tails.push_back(realize(s));
    return true;
  });

  Count moves = 0;
  for (const auto& [g, part] : heads) {
    for (const Graph& h : tails) {
      const Graph c = compose_graphs(g, part, h);
      const Vertex head_n = g.order();
      for (const auto& perm : oracle::automorphisms(c)) {
        for (Vertex u = 0; u < head_n; ++u) {
          const Vertex v = perm.mapping[u];
          if (v < head_n) continue;
          ++moves;
          const bool in_a = std::find(part.k_set.begin(), part.k_set.end(), u) != part.k_set.end();
          const Count a = static_cast<Count>(part.k_set.size());
          const Count local = g.degree(u);
          // Swing: an A vertex with no B neighbour, or a B vertex seeing all of A.
          EXPECT_TRUE(in_a ? local == a - 1 : local == a);
          const Vertex hv = v - head_n;
          EXPECT_EQ(h.degree(hv), in_a ? h.order() - 1 : 0);
        }
      }
    }
  }
  EXPECT_GT(moves, 0);
}

}  // namespace
}  // namespace unigraph
