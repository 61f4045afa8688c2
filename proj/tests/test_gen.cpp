#include <gtest/gtest.h>

#include "helpers.hpp"
#include "unigraph/gen.hpp"

namespace unigraph {
namespace {

std::vector<std::string> tags(const std::vector<TypedComponent>& list) {
  std::vector<std::string> out;
  for (const auto& c : list) out.push_back(to_string(c));
  return out;
}

TEST(Generate, ForcedCases) {
  GenSpec c5;
  c5.n = 5;
  c5.allowed = std::set<Base>{Base::kC5};
  EXPECT_EQ(tags(generate(c5)), std::vector<std::string>{"c5"});

  GenSpec one;
  one.n = 1;
  const auto single = generate(one);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].order(), 1);
}

TEST(Generate, TwoComponentsOfTen) {
  GenSpec spec;
  spec.n = 10;
  spec.k = 2;
  spec.seed = 42;
  const auto list = generate(spec);
  ASSERT_EQ(list.size(), 2u);
  EXPECT_TRUE(is_split_base(list[0].base));
  EXPECT_EQ(list[0].order() + list[1].order(), 10);
  const Decomposition d = decompose(compose_types(list));
  EXPECT_EQ(d.components.size(), 1u);
}

TEST(Generate, SameSeedSameOutput) {
  GenSpec spec;
  spec.n = 200;
  spec.k = 7;
  spec.seed = 9;
  EXPECT_EQ(generate(spec), generate(spec));
  spec.seed = 10;
  const auto other = generate(spec);
  EXPECT_EQ(other.size(), 7u);
}

TEST(Generate, Infeasible) {
  GenSpec spec;
  spec.n = 2;
  spec.k = 1;
  EXPECT_THROW(generate(spec), Error);  // nothing indecomposable has 2 vertices
  spec.n = 3;
  EXPECT_THROW(generate(spec), Error);
  spec.n = 4;
  spec.k = 5;
  EXPECT_THROW(generate(spec), Error);
  spec.n = 4;
  spec.k = 1;
  spec.allowed = std::set<Base>{Base::kC5};
  EXPECT_THROW(generate(spec), Error);
  spec.n = 10;
  spec.k = 2;
  spec.allowed = std::set<Base>{Base::kC5, Base::kMK2};
  EXPECT_THROW(generate(spec), Error);  // no split head allowed
}

// The matcher may pick a different tag for the same graph, so compare
// the sequences the tags stand for.
TEST(Generate, RoundTripThousandDraws) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n = 1 + static_cast<Count>(seed % 30);
    if (spec.n == 2 || spec.n == 3) spec.n += 2;
    spec.k = 1 + static_cast<Count>((seed / 30) % std::max<Count>(1, spec.n / 4));
    std::vector<TypedComponent> list;
    try {
      list = generate(spec);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::kInfeasible);
      continue;
    }
    ASSERT_EQ(static_cast<Count>(list.size()), spec.k);
    Count total = 0;
    for (const auto& c : list) total += c.order();
    ASSERT_EQ(total, spec.n);

    const DegreeSequence s = compose_types(list);
    const UnigraphResult r = is_unigraph(s);
    ASSERT_TRUE(r.report.is_unigraph) << to_string(s);
    ASSERT_EQ(r.report.component_types.size(), list.size()) << to_string(s);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& got = r.report.component_types[i];
      EXPECT_EQ(got.order(), list[i].order());
      if (i + 1 < list.size()) {
        EXPECT_EQ(type_to_paired(got), type_to_paired(list[i])) << to_string(s);
      } else {
        EXPECT_EQ(type_degree_sequence(got), type_degree_sequence(list[i])) << to_string(s);
      }
    }
  }
}

TEST(Generate, DistinctCompactKeepsComponentCount) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenSpec spec;
    spec.n = 40;
    spec.k = 6;
    spec.seed = seed;
    spec.distinct_compact = true;
    const auto list = generate(spec);
    const CompactDecomposition c = compact(decompose(compose_types(list)));
    EXPECT_EQ(static_cast<Count>(c.components.size() + (c.tail ? 1 : 0)), spec.k);
  }
}

TEST(Generate, RestrictedBases) {
  GenSpec spec;
  spec.n = 60;
  spec.k = 3;
  spec.allowed = std::set<Base>{Base::kSPQ, Base::kU2};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    spec.seed = seed;
    for (const auto& c : generate(spec)) {
      EXPECT_TRUE(c.base == Base::kSPQ || c.base == Base::kU2);
    }
  }
}

}  // namespace
}  // namespace unigraph
