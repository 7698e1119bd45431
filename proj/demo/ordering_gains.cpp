// How much does the transmission ordering matter? For one SNR profile this
// prints the rates of the optimal chain and star against a random tree and
// the exhaustive-search maximum.

#include <cstdio>

#include "mwrc/mwrc.hpp"

int main() {
  // all SNRs at 1 or above, so the clamped and unclamped bounds coincide and
  // every figure below is directly comparable
  const mwrc::SnrProfile profile = mwrc::canonicalize({2.5, 1.2, 7.0, 1.6});
  const int n = profile.size();

  std::printf("users: %d, SNRs sorted:", n);
  for (double v : profile.values()) std::printf(" %.2f", v);
  std::printf("\n\n");

  const mwrc::ClientGraph chain =
      mwrc::build_client_graph(mwrc::chain_ordering(n), n);
  const mwrc::ClientGraph star =
      mwrc::build_client_graph(mwrc::star_ordering(n), n);
  mwrc::SplitMix64 rng(23);
  const mwrc::ClientGraph random_tree = mwrc::sample_uniform_tree(n, rng);

  const auto show = [&](const char* name, const mwrc::ClientGraph& graph) {
    const mwrc::RateReport report =
        mwrc::evaluate(graph, profile, mwrc::BoundKind::Exact);
    std::printf("%-12s common %.5f  sum %.5f  edges:", name,
                report.common_rate, report.sum_rate);
    for (mwrc::UserPair e : graph.edges()) std::printf(" %d-%d", e.a, e.b);
    std::printf("\n");
  };
  show("chain", chain);
  show("star", star);
  show("random", random_tree);

  const mwrc::BruteForceResult best_common = mwrc::brute_force_best(
      profile, mwrc::Objective::Common, mwrc::BoundKind::Weak);
  const mwrc::BruteForceResult best_sum = mwrc::brute_force_best(
      profile, mwrc::Objective::Sum, mwrc::BoundKind::Weak);
  std::printf("\nexhaustive over %llu trees: best common %.5f, best sum %.5f\n",
              static_cast<unsigned long long>(mwrc::tree_count(n)),
              best_common.best_value, best_sum.best_value);
  std::printf("closed forms:               best common %.5f, best sum %.5f\n",
              mwrc::max_common_rate_closed_form(profile),
              mwrc::max_sum_rate_closed_form(profile));
  return 0;
}
