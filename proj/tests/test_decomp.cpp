#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "unigraph/decomp_reference.hpp"
#include "unigraph/gen.hpp"
#include "unigraph/oracle.hpp"
#include "unigraph/verify.hpp"

namespace unigraph {
namespace {

using testing::paired;
using testing::seq;

TEST(FindSplitPoint, Examples) {
  EXPECT_EQ(find_split_point(seq("4^2,2^3")), (SplitPoint{1, 0}));
  EXPECT_FALSE(find_split_point(seq("2^5")));
  EXPECT_EQ(find_split_point(seq("6,5,4^3,1^3")), (SplitPoint{2, 3}));
  EXPECT_FALSE(find_split_point(seq("0")));
  EXPECT_FALSE(find_split_point(seq("-")));
  EXPECT_EQ(find_split_point(seq("1^2,0")), (SplitPoint{0, 1}));
}

TEST(Decompose, ThresholdGraph) {
  const Decomposition d = decompose(seq("4^2,2^3"));
  const std::vector<PairedDegreeSequence> expect{paired("0;-"), paired("0;-"), paired("-;0"),
                                                 paired("-;0")};
  EXPECT_EQ(d.components, expect);
  EXPECT_EQ(d.tail, seq("0"));
}

TEST(Decompose, Examples) {
  const Decomposition c5 = decompose(seq("2^5"));
  EXPECT_TRUE(c5.components.empty());
  EXPECT_EQ(c5.tail, seq("2^5"));

  const Decomposition d = decompose(seq("8^4,5^4,2^2"));
  EXPECT_EQ(d.components, std::vector<PairedDegreeSequence>{paired("4^4;2^2")});
  EXPECT_EQ(d.tail, seq("1^4"));

  EXPECT_EQ(decompose(seq("-")), Decomposition{});
}

TEST(ComposeAll, Examples) {
  EXPECT_EQ(compose_all({paired("0;-"), paired("0;-"), paired("-;0"), paired("-;0")}, seq("0")),
            seq("4^2,2^3"));
  EXPECT_EQ(compose_all({paired("0;-")}, seq("2^5")), seq("5,3^5"));
  EXPECT_EQ(compose_all({}, seq("2^5")), seq("2^5"));
}

// The stated value for this case is left to the oracle: build it from graphs.
TEST(ComposeAll, CliqueThenEdgelessAgainstGraphs) {
  const std::vector<Edge> k3e{{0, 1}, {0, 2}, {1, 2}};
  const Graph k3 = Graph::from_edges(3, k3e);
  const Graph inner = compose_graphs(Graph(4), {{}, {0, 1, 2, 3}}, Graph(0));
  const Graph g = compose_graphs(k3, {{0, 1, 2}, {}}, inner);
  const DegreeSequence composed = compose_all({paired("2^3;-"), paired("-;0^4")}, seq("-"));
  EXPECT_EQ(composed, degree_sequence_of(g));
  EXPECT_EQ(composed, seq("6^3,3^4"));
}

TEST(Compact, Examples) {
  const CompactDecomposition thr = compact(decompose(seq("4^2,2^3")));
  EXPECT_EQ(thr.components, (std::vector<PairedDegreeSequence>{paired("1^2;-"), paired("-;0^3")}));
  EXPECT_FALSE(thr.tail);

  Decomposition d;
  d.components = {paired("-;0"), paired("0;-"), paired("0;-"), paired("0;-"),
                  paired("-;0"), paired("-;0"), paired("-;0")};
  d.tail = seq("0");
  const CompactDecomposition c = compact(d);
  EXPECT_EQ(c.components,
            (std::vector<PairedDegreeSequence>{paired("-;0"), paired("2^3;-"), paired("-;0^4")}));
  EXPECT_FALSE(c.tail);

  const Decomposition plain = decompose(seq("8^4,5^4,2^2"));
  const CompactDecomposition same = compact(plain);
  EXPECT_EQ(same.components, plain.components);
  ASSERT_TRUE(same.tail);
  EXPECT_EQ(*same.tail, plain.tail);
}

TEST(Compact, LoneTailAfterLargeComponent) {
  Decomposition d;
  d.components = {paired("3,2;1^3")};
  d.tail = seq("0");
  const CompactDecomposition c = compact(d);
  EXPECT_EQ(c.components, (std::vector<PairedDegreeSequence>{paired("3,2;1^3"), paired("-;0")}));
  EXPECT_FALSE(c.tail);
}

void check_decomposition(const DegreeSequence& s) {
  const Decomposition d = decompose(s);
  ASSERT_EQ(compose_all(d.components, d.tail), s) << to_string(s);
  for (const auto& c : d.components) {
    EXPECT_TRUE(is_valid_paired(c)) << to_string(s);
    EXPECT_FALSE(find_split_point(c.merged())) << to_string(s) << " head " << to_string(c);
  }
  EXPECT_FALSE(find_split_point(d.tail)) << to_string(s);

  const CompactDecomposition c = compact(d);
  for (std::size_t i = 0; i + 1 < c.components.size(); ++i) {
    const bool k_here = c.components[i].q() == 0 && c.components[i].k_part.max_degree() + 1 == c.components[i].p();
    const bool k_next = c.components[i + 1].q() == 0 && c.components[i + 1].k_part.max_degree() + 1 == c.components[i + 1].p();
    const bool s_here = c.components[i].p() == 0;
    const bool s_next = c.components[i + 1].p() == 0;
    EXPECT_FALSE(k_here && k_next) << to_string(s);
    EXPECT_FALSE(s_here && s_next) << to_string(s);
  }
  if (c.tail) {
    EXPECT_GE(c.tail->size(), 2);
  }
}

TEST(Decompose, ExhaustiveSmallProperties) {
  verify::for_each_graphical(8, [](const DegreeSequence& s) {
    check_decomposition(s);
    EXPECT_EQ(decompose(s), reference::decompose(s)) << to_string(s);
    EXPECT_EQ(find_split_point(s), reference::find_split_point(s)) << to_string(s);
    return true;
  });
}

// Dominant or isolated vertex: a one-vertex head comes off first.
TEST(Decompose, DominantAndIsolatedVertices) {
  verify::for_each_graphical(7, [](const DegreeSequence& s) {
    const Count n = s.size();
    if (n < 2) return true;
    const auto sp = find_split_point(s);
    if (s.min_degree() == 0) {
      EXPECT_EQ(sp, (SplitPoint{0, 1})) << to_string(s);
    } else if (s.max_degree() == n - 1) {
      EXPECT_EQ(sp, (SplitPoint{1, 0})) << to_string(s);
    }
    return true;
  });
}

TEST(Decompose, RandomLargeAgainstReference) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    GenSpec spec;
    spec.n = std::uniform_int_distribution<Count>(5, 120)(rng);
    spec.k = std::uniform_int_distribution<Count>(1, std::max<Count>(1, spec.n / 6))(rng);
    spec.seed = rng();
    const DegreeSequence s = compose_types(generate(spec));
    check_decomposition(s);
    EXPECT_EQ(decompose(s), reference::decompose(s)) << to_string(s);
  }
}

TEST(Decompose, RandomGraphsAgainstReference) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Vertex n = std::uniform_int_distribution<Vertex>(2, 60)(rng);
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::bernoulli_distribution coin(density);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) e.push_back({u, v});
    const DegreeSequence s = degree_sequence_of(Graph::from_edges(n, e));
    check_decomposition(s);
    EXPECT_EQ(decompose(s), reference::decompose(s)) << to_string(s);
  }
}

// Recomposing the same component list from differently labelled graphs and
// re-decomposing returns the same list.
TEST(Decompose, CanonicalUnderRelabelling) {
  std::mt19937_64 rng(3);
  verify::for_each_graphical(7, [&](const DegreeSequence& s) {
    const Decomposition d = decompose(s);
    Graph g = realize(s);
    g = testing::relabel(g, testing::shuffled_ids(g.order(), rng));
    EXPECT_EQ(decompose(degree_sequence_of(g)), d);
    return true;
  });
}

// Components realized separately and glued as graphs give back the list.
TEST(Decompose, CanonicalFromGraphComposition) {
  verify::for_each_graphical(9, [](const DegreeSequence& s) {
    const Decomposition d = decompose(s);
    if (d.components.empty()) return true;
    Graph g = realize(d.tail);
    for (auto it = d.components.rbegin(); it != d.components.rend(); ++it) {
      const Graph h = realize(it->merged());
      VertexPartition part;
      std::vector<bool> in_k(h.order(), false);
      std::fill(in_k.begin(), in_k.begin() + it->p(), true);
      do {
        part = {};
        for (Vertex v = 0; v < h.order(); ++v) (in_k[v] ? part.k_set : part.s_set).push_back(v);
      } while (!is_ks_partition(h, part) && std::prev_permutation(in_k.begin(), in_k.end()));
      EXPECT_TRUE(is_ks_partition(h, part)) << to_string(*it);
      EXPECT_EQ(paired_sequence_of(h, part), *it);
      g = compose_graphs(h, part, g);
    }
    EXPECT_EQ(decompose(degree_sequence_of(g)), d) << to_string(s);
    return true;
  });
}

TEST(ComposeAll, FuzzRoundTrip) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenSpec spec;
    spec.n = 1000 + static_cast<Count>(seed) * 37;
    spec.k = 1 + static_cast<Count>(seed % 40);
    spec.seed = seed;
    const auto types = generate(spec);
    const DegreeSequence s = compose_types(types);
    const Decomposition d = decompose(s);
    EXPECT_EQ(compose_all(d.components, d.tail), s);
    EXPECT_EQ(static_cast<Count>(d.components.size()) + 1, spec.k);
  }
}

}  // namespace
}  // namespace unigraph
