#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mwrc/optimal.hpp"
#include "mwrc/prufer.hpp"
#include "mwrc/rate.hpp"
#include "mwrc/rng.hpp"
#include "mwrc/sim.hpp"

namespace {

using namespace mwrc;

ChannelConfig small_config() {
  ChannelConfig config;
  config.n_users = 4;
  config.snr_sweep_db = {1.0, 8.0, 15.0};
  config.trials = 2000;
  config.seed = 42;
  return config;
}

TEST(RngTest, SplitMixIsStableAcrossRuns) {
  SplitMix64 a(1);
  SplitMix64 b(1);
  for (int t = 0; t < 100; ++t) EXPECT_EQ(a(), b());
  // a different stream really is different
  SplitMix64 c(2);
  EXPECT_NE(SplitMix64(1)(), c());
}

TEST(RngTest, UniformBelowStaysInRangeAndCoversIt) {
  SplitMix64 rng(5);
  std::vector<int> seen(6, 0);
  for (int t = 0; t < 6000; ++t)
    ++seen[static_cast<std::size_t>(uniform_below(rng, 6))];
  for (int v = 0; v < 6; ++v) EXPECT_GT(seen[static_cast<std::size_t>(v)], 800);
  EXPECT_THROW(uniform_below(rng, 0), DomainError);
}

TEST(RngTest, GaussianMomentsAreSane) {
  SplitMix64 rng(7);
  double sum = 0.0, sum_sq = 0.0;
  const int draws = 40000;
  for (int t = 0; t < draws / 2; ++t) {
    const GaussianPair g = gaussian_pair(rng);
    sum += g.first + g.second;
    sum_sq += g.first * g.first + g.second * g.second;
  }
  EXPECT_NEAR(sum / draws, 0.0, 0.02);
  EXPECT_NEAR(sum_sq / draws, 1.0, 0.03);
}

TEST(SampleProfileTest, MeanSnrTracksNoiseAndVariance) {
  ChannelConfig config;
  config.n_users = 2;
  config.snr_sweep_db = {0.0};
  // default variance 1/2: E|g|^2 = 1, so E[x] = 1/sigma^2
  for (double sigma2 : {1.0, 0.25}) {
    SplitMix64 rng(31);
    double sum = 0.0;
    const int draws = 20000;
    for (int t = 0; t < draws; ++t) {
      const SnrProfile p = sample_snr_profile(config, sigma2, rng);
      sum += p.value(1) + p.value(2);
    }
    EXPECT_NEAR(sum / (2.0 * draws) * sigma2, 1.0, 0.03);
  }
  // doubling the component variance doubles the mean SNR
  config.fading_variance = 1.0;
  SplitMix64 rng(31);
  double sum = 0.0;
  for (int t = 0; t < 20000; ++t) {
    const SnrProfile p = sample_snr_profile(config, 1.0, rng);
    sum += p.value(1) + p.value(2);
  }
  EXPECT_NEAR(sum / 40000.0, 2.0, 0.06);
}

TEST(ConfigTest, ValidateRejectsBadSettings) {
  ChannelConfig config = small_config();
  config.n_users = 1;
  EXPECT_THROW(validate(config), DomainError);
  config = small_config();
  config.transmit_power = 0.0;
  EXPECT_THROW(validate(config), DomainError);
  config = small_config();
  config.fading_variance = -1.0;
  EXPECT_THROW(validate(config), DomainError);
  config = small_config();
  config.trials = 0;
  EXPECT_THROW(validate(config), DomainError);
  config = small_config();
  config.snr_sweep_db.clear();
  EXPECT_THROW(validate(config), DomainError);
}

TEST(ExperimentTest, SingleTrialEqualsDirectEvaluation) {
  ChannelConfig config;
  config.n_users = 3;
  config.snr_sweep_db = {3.0};
  config.trials = 1;
  config.seed = 77;
  const std::vector<GapStats> stats = run_gap_experiment(config);
  ASSERT_EQ(stats.size(), 1u);

  // replay the one trial by hand through the same substream
  SplitMix64 rng(derive_seed(77, 0, 0));
  const double sigma2 = std::pow(10.0, -3.0 / 10.0);
  const SnrProfile profile = sample_snr_profile(config, sigma2, rng);
  const ClientGraph tree = sample_uniform_tree(3, rng);
  const ClientGraph chain = build_client_graph(chain_ordering(3), 3);
  const ClientGraph star = build_client_graph(star_ordering(3), 3);
  EXPECT_EQ(stats[0].mean_cr_opt,
            evaluate(chain, profile, BoundKind::Exact).common_rate);
  EXPECT_EQ(stats[0].mean_sr_opt,
            evaluate(star, profile, BoundKind::Exact).sum_rate);
  const RateReport random_report = evaluate(tree, profile, BoundKind::Exact);
  EXPECT_EQ(stats[0].mean_cr_rand, random_report.common_rate);
  EXPECT_EQ(stats[0].mean_sr_rand, random_report.sum_rate);
}

TEST(ExperimentTest, IdenticalConfigGivesIdenticalStats) {
  const ChannelConfig config = small_config();
  const std::vector<GapStats> a = run_gap_experiment(config);
  const std::vector<GapStats> b = run_gap_experiment(config);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].mean_cr_opt, b[i].mean_cr_opt);
    EXPECT_EQ(a[i].mean_cr_rand, b[i].mean_cr_rand);
    EXPECT_EQ(a[i].mean_sr_opt, b[i].mean_sr_opt);
    EXPECT_EQ(a[i].mean_sr_rand, b[i].mean_sr_rand);
    EXPECT_EQ(a[i].g_c, b[i].g_c);
    EXPECT_EQ(a[i].g_s, b[i].g_s);
  }
}

TEST(ExperimentTest, ThreadCountDoesNotChangeResults) {
  ChannelConfig config = small_config();
  config.threads = 1;
  const std::vector<GapStats> serial = run_gap_experiment(config);
  config.threads = 3;
  const std::vector<GapStats> parallel = run_gap_experiment(config);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].mean_cr_opt, parallel[i].mean_cr_opt);
    EXPECT_EQ(serial[i].mean_cr_rand, parallel[i].mean_cr_rand);
    EXPECT_EQ(serial[i].mean_sr_opt, parallel[i].mean_sr_opt);
    EXPECT_EQ(serial[i].mean_sr_rand, parallel[i].mean_sr_rand);
  }
}

TEST(ExperimentTest, GapsSitInTheUnitInterval) {
  const std::vector<GapStats> stats = run_gap_experiment(small_config());
  for (const GapStats& s : stats) {
    EXPECT_GT(s.mean_cr_opt, 0.0);
    EXPECT_GE(s.g_c, 0.0);
    EXPECT_LE(s.g_c, 1.0);
    EXPECT_GE(s.g_s, 0.0);
    EXPECT_LE(s.g_s, 1.0);
    EXPECT_GE(s.mean_cr_opt, s.mean_cr_rand);
    EXPECT_GE(s.mean_sr_opt, s.mean_sr_rand);
  }
}

// Replays the experiment's own substreams: inside the equivalence regime the
// constructive orderings win every single trial, and the observed gaps stay
// under the analytic bounds.
TEST(ExperimentTest, PerTrialDominanceAndGapBoundsInRegime) {
  ChannelConfig config;
  config.n_users = 4;
  config.snr_sweep_db = {6.0};
  config.seed = 19;
  const double sigma2 = std::pow(10.0, -0.6);
  const ClientGraph chain = build_client_graph(chain_ordering(4), 4);
  const ClientGraph star = build_client_graph(star_ordering(4), 4);
  int in_regime = 0;
  for (int t = 0; t < 2000; ++t) {
    SplitMix64 rng(derive_seed(19, 0, static_cast<std::uint64_t>(t)));
    const SnrProfile profile = sample_snr_profile(config, sigma2, rng);
    const ClientGraph tree = sample_uniform_tree(4, rng);
    if (!weak_bound_equivalent(profile)) continue;
    ++in_regime;
    const double cr_opt = evaluate(chain, profile, BoundKind::Exact).common_rate;
    const double sr_opt = evaluate(star, profile, BoundKind::Exact).sum_rate;
    const RateReport random_report = evaluate(tree, profile, BoundKind::Exact);
    EXPECT_GE(cr_opt, random_report.common_rate);
    EXPECT_GE(sr_opt, random_report.sum_rate);
    const GapBounds bounds = gap_bounds(profile);
    EXPECT_LE(cr_opt - random_report.common_rate,
              bounds.common_gap_bound + 1e-9);
    EXPECT_LE(sr_opt - random_report.sum_rate, bounds.sum_gap_bound + 1e-9);
  }
  EXPECT_GT(in_regime, 500);  // the regime dominates at 6 dB
}

TEST(CsvTest, HeaderAndShapeAreStable)
{
  ChannelConfig config = small_config();
  config.trials = 50;
  const std::vector<GapStats> stats = run_gap_experiment(config);
  std::ostringstream out;
  write_gap_csv(out, stats);
  const std::string text = out.str();
  EXPECT_EQ(text.find("snr_db,n,trials,mean_cr_opt,mean_cr_rand,mean_sr_opt,"
                      "mean_sr_rand,g_c,g_s\n"),
            0u);
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  EXPECT_EQ(lines, 4);  // header + one row per sweep point
  EXPECT_EQ(text.find('\r'), std::string::npos);
  // first data row carries the sweep point and the configured shape
  EXPECT_NE(text.find("\n1,4,50,"), std::string::npos);
}

}  // namespace
