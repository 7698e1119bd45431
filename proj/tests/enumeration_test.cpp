#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "mwrc/client_graph.hpp"
#include "mwrc/optimal.hpp"
#include "mwrc/prufer.hpp"
#include "mwrc/rate.hpp"
#include "mwrc/rng.hpp"
#include "mwrc/snr_profile.hpp"

namespace {

using namespace mwrc;

TEST(PruferDecodeTest, MatchesHandWorkedExamples) {
  const ClientGraph edge = prufer_decode(PruferCode{}, 2);
  EXPECT_TRUE(edge.has_edge(1, 2));
  EXPECT_EQ(edge.edge_count(), 1);

  const ClientGraph star2 = prufer_decode(PruferCode{{2, 2}}, 4);
  EXPECT_TRUE(star2.has_edge(1, 2));
  EXPECT_TRUE(star2.has_edge(3, 2));
  EXPECT_TRUE(star2.has_edge(2, 4));
  EXPECT_EQ(star2.degree(2), 3);

  const ClientGraph star1 = prufer_decode(PruferCode{{1, 1, 1}}, 5);
  EXPECT_EQ(star1.degree(1), 4);
  EXPECT_TRUE(is_tree(star1));
}

TEST(PruferDecodeTest, RejectsBadCodes) {
  EXPECT_THROW(prufer_decode(PruferCode{{1}}, 2), DomainError);
  EXPECT_THROW(prufer_decode(PruferCode{{0, 1}}, 4), DomainError);
  EXPECT_THROW(prufer_decode(PruferCode{{5, 1}}, 4), DomainError);
  EXPECT_THROW(prufer_decode(PruferCode{}, 1), DomainError);
}

TEST(PruferEncodeTest, MatchesHandWorkedExamples) {
  const ClientGraph path(3, std::vector<UserPair>{{1, 2}, {2, 3}});
  EXPECT_EQ(prufer_encode(path).labels, (std::vector<int>{2}));

  const ClientGraph star(4, std::vector<UserPair>{{1, 2}, {3, 2}, {2, 4}});
  EXPECT_EQ(prufer_encode(star).labels, (std::vector<int>{2, 2}));

  const ClientGraph triangle(3, std::vector<UserPair>{{1, 2}, {2, 3}, {3, 1}});
  EXPECT_THROW(prufer_encode(triangle), DomainError);
}

TEST(PruferBijectionTest, RoundTripsExhaustively) {
  for (int n = 2; n <= 6; ++n) {
    for_each_tree(n, [&](const PruferCode& code, const ClientGraph& tree) {
      EXPECT_TRUE(is_tree(tree));
      EXPECT_EQ(prufer_encode(tree), code);
    });
  }
}

TEST(EnumerationTest, HitsTheCayleyCounts) {
  const std::vector<std::uint64_t> expected{1, 3, 16, 125, 1296, 16807};
  for (int n = 2; n <= 7; ++n) {
    std::uint64_t seen = 0;
    for_each_code(n, [&](const PruferCode&) { ++seen; });
    EXPECT_EQ(seen, expected[static_cast<std::size_t>(n - 2)]);
    EXPECT_EQ(tree_count(n), expected[static_cast<std::size_t>(n - 2)]);
  }
}

TEST(EnumerationTest, CodesComeInLexicographicOrderWithoutRepeats) {
  std::vector<std::vector<int>> codes;
  for_each_code(4, [&](const PruferCode& c) { codes.push_back(c.labels); });
  ASSERT_EQ(codes.size(), 16u);
  EXPECT_TRUE(std::is_sorted(codes.begin(), codes.end()));
  EXPECT_EQ(std::adjacent_find(codes.begin(), codes.end()), codes.end());
}

TEST(EnumerationTest, CapGuardsTheBlowup) {
  EXPECT_THROW(for_each_code(10, [](const PruferCode&) {}), CapacityError);
  EXPECT_THROW(for_each_code(5, [](const PruferCode&) {}, 4), CapacityError);
  EXPECT_NO_THROW(for_each_code(4, [](const PruferCode&) {}, 4));
}

TEST(BruteForceTest, FindsTheKnownOptimaOnThreeUsers) {
  const SnrProfile p = canonicalize({1.0, 2.0, 4.0});
  const BruteForceResult common =
      brute_force_best(p, Objective::Common, BoundKind::Weak);
  EXPECT_TRUE(rates_close(common.best_value, 0.10375937481971095));
  const PruferCode chain_code{{2}};
  EXPECT_NE(std::find(common.co_optimal.begin(), common.co_optimal.end(),
                      chain_code),
            common.co_optimal.end());

  const BruteForceResult sum =
      brute_force_best(p, Objective::Sum, BoundKind::Weak);
  EXPECT_TRUE(rates_close(sum.best_value, 0.98527657773660787));
  const PruferCode star_code{{1}};
  EXPECT_NE(
      std::find(sum.co_optimal.begin(), sum.co_optimal.end(), star_code),
      sum.co_optimal.end());
}

TEST(BruteForceTest, SymmetricProfileMakesEveryTreeCoOptimal) {
  const SnrProfile p = canonicalize({2.0, 2.0, 2.0});
  const BruteForceResult r =
      brute_force_best(p, Objective::Common, BoundKind::Weak);
  EXPECT_EQ(r.co_optimal.size(), 3u);
}

TEST(BruteForceTest, AgreesWithEvaluateOnEveryTree) {
  const SnrProfile p = canonicalize({0.7, 1.9, 3.1, 8.0});
  for (Objective objective : {Objective::Common, Objective::Sum}) {
    for (BoundKind kind : {BoundKind::Weak, BoundKind::Exact}) {
      const BruteForceResult r = brute_force_best(p, objective, kind);
      double best = -1e300;
      for_each_tree(4, [&](const PruferCode&, const ClientGraph& tree) {
        const RateReport rep = evaluate(tree, p, kind);
        best = std::max(best, objective == Objective::Common ? rep.common_rate
                                                             : rep.sum_rate);
      });
      EXPECT_EQ(r.best_value, best);
    }
  }
}

TEST(SampleTreeTest, TwoUsersAlwaysGiveTheSingleEdge) {
  SplitMix64 rng(9);
  for (int t = 0; t < 10; ++t) {
    const ClientGraph g = sample_uniform_tree(2, rng);
    EXPECT_TRUE(g.has_edge(1, 2));
  }
}

TEST(SampleTreeTest, FixedSeedReproducesTheSequence) {
  SplitMix64 a(123);
  SplitMix64 b(123);
  for (int t = 0; t < 50; ++t) {
    EXPECT_EQ(sample_uniform_tree(6, a).edges(),
              sample_uniform_tree(6, b).edges());
  }
}

TEST(SampleTreeTest, AlwaysProducesTrees) {
  SplitMix64 rng(13);
  for (int t = 0; t < 200; ++t)
    EXPECT_TRUE(is_tree(sample_uniform_tree(7, rng)));
}

// Coarse uniformity screen; the acceptance run does the strict chi-square.
TEST(SampleTreeTest, FrequenciesLookUniform) {
  SplitMix64 rng(99);
  std::map<std::vector<int>, int> counts;
  const int samples = 16000;
  for (int t = 0; t < samples; ++t)
    ++counts[prufer_encode(sample_uniform_tree(4, rng)).labels];
  ASSERT_EQ(counts.size(), 16u);
  for (const auto& [code, count] : counts) {
    EXPECT_GT(count, samples / 16 * 0.8);
    EXPECT_LT(count, samples / 16 * 1.2);
  }
}

}  // namespace
