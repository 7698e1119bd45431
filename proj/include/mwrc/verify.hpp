#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwrc/client_graph.hpp"
#include "mwrc/errors.hpp"
#include "mwrc/optimal.hpp"
#include "mwrc/prufer.hpp"
#include "mwrc/rate.hpp"
#include "mwrc/rng.hpp"
#include "mwrc/snr_profile.hpp"

namespace mwrc {

// Property suites behind the `verify` subcommand: each check replays one of
// the claims (feasibility = tree, optimal orderings beat exhaustive search,
// the tree-improvement inequalities, the gap bounds) on seeded random inputs
// and reports how many cases it saw and how many misbehaved.

struct CheckResult {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t violations = 0;
};

struct VerifyOptions {
  int n_min = 3;
  int n_max = 5;
  int profiles_per_n = 500;
  std::uint64_t seed = 1;
  int cap = kDefaultEnumerationCap;
};

namespace detail {

[[nodiscard]] inline SnrProfile random_profile(int n, SplitMix64& rng,
                                               double lo, double hi) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    values.push_back(lo + (hi - lo) * uniform_unit(rng));
  return canonicalize(values);
}

}  // namespace detail

// Every (n choose 2 over n-1)-edge subset of the complete graph: feasibility
// (connectivity) must coincide with being a tree when the edge budget is
// exactly n - 1.
[[nodiscard]] inline CheckResult check_feasible_iff_tree(int n) {
  if (n < 2) throw DomainError("need at least two users");
  if (n > 8) throw CapacityError("edge-subset enumeration capped at n = 8");
  CheckResult res{"feasible-iff-tree n=" + std::to_string(n), 0, 0};
  std::vector<UserPair> all_edges;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) all_edges.push_back({a, b});
  const int total = static_cast<int>(all_edges.size());
  const int k = n - 1;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  std::vector<UserPair> subset(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i)
      subset[static_cast<std::size_t>(i)] =
          all_edges[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
    const ClientGraph graph(n, subset);
    ++res.checked;
    if (is_feasible(graph) != is_tree(graph)) ++res.violations;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return res;
}

// encode(decode(code)) = code for every code, and the decoded graph is a
// tree; exhaustive over all n^{n-2} codes.
[[nodiscard]] inline CheckResult check_prufer_roundtrip(
    int n, int cap = kDefaultEnumerationCap) {
  CheckResult res{"prufer-roundtrip n=" + std::to_string(n), 0, 0};
  for_each_tree(
      n,
      [&](const PruferCode& code, const ClientGraph& tree) {
        ++res.checked;
        if (!is_tree(tree) || !(prufer_encode(tree) == code)) ++res.violations;
      },
      cap);
  return res;
}

// The chain attains the exhaustive-search maximum of the common rate on
// every profile, and its code shows up in the co-optimal set.
[[nodiscard]] inline CheckResult check_chain_optimal(
    int n, int profiles, std::uint64_t seed, int cap = kDefaultEnumerationCap) {
  CheckResult res{"chain-common-optimal n=" + std::to_string(n), 0, 0};
  const ClientGraph chain = build_client_graph(chain_ordering(n), n);
  const PruferCode chain_code = prufer_encode(chain);
  for (int p = 0; p < profiles; ++p) {
    SplitMix64 rng(derive_seed(seed, 0, static_cast<std::uint64_t>(p)));
    const SnrProfile profile = detail::random_profile(n, rng, 1.0, 100.0);
    const double chain_value =
        evaluate(chain, profile, BoundKind::Weak).common_rate;
    const BruteForceResult best =
        brute_force_best(profile, Objective::Common, BoundKind::Weak, cap);
    const bool in_set =
        std::find(best.co_optimal.begin(), best.co_optimal.end(), chain_code) !=
        best.co_optimal.end();
    ++res.checked;
    if (!rates_close(chain_value, best.best_value) || !in_set)
      ++res.violations;
  }
  return res;
}

// Same for the star and the sum rate.
[[nodiscard]] inline CheckResult check_star_optimal(
    int n, int profiles, std::uint64_t seed, int cap = kDefaultEnumerationCap) {
  CheckResult res{"star-sum-optimal n=" + std::to_string(n), 0, 0};
  const ClientGraph star = build_client_graph(star_ordering(n), n);
  const PruferCode star_code = prufer_encode(star);
  for (int p = 0; p < profiles; ++p) {
    SplitMix64 rng(derive_seed(seed, 0, static_cast<std::uint64_t>(p)));
    const SnrProfile profile = detail::random_profile(n, rng, 1.0, 100.0);
    const double star_value = evaluate(star, profile, BoundKind::Weak).sum_rate;
    const BruteForceResult best =
        brute_force_best(profile, Objective::Sum, BoundKind::Weak, cap);
    const bool in_set =
        std::find(best.co_optimal.begin(), best.co_optimal.end(), star_code) !=
        best.co_optimal.end();
    ++res.checked;
    if (!rates_close(star_value, best.best_value) || !in_set) ++res.violations;
  }
  return res;
}

// The closed forms and the generic evaluator share their arithmetic, so away
// from the low-SNR clamp (all SNRs >= 1 here) they must agree to the bit.
[[nodiscard]] inline CheckResult check_closed_forms(int n, int profiles,
                                                    std::uint64_t seed) {
  CheckResult res{"closed-form-exact n=" + std::to_string(n), 0, 0};
  const ClientGraph chain = build_client_graph(chain_ordering(n), n);
  const ClientGraph star = build_client_graph(star_ordering(n), n);
  for (int p = 0; p < profiles; ++p) {
    SplitMix64 rng(derive_seed(seed, 0, static_cast<std::uint64_t>(p)));
    const SnrProfile profile = detail::random_profile(n, rng, 1.0, 100.0);
    ++res.checked;
    if (max_common_rate_closed_form(profile) !=
            evaluate(chain, profile, BoundKind::Weak).common_rate ||
        max_sum_rate_closed_form(profile) !=
            evaluate(star, profile, BoundKind::Weak).sum_rate ||
        sum_clamp_active(profile))
      ++res.violations;
  }
  return res;
}

// Detaching a minimum-SNR neighbor of the top-SNR vertex and re-attaching it
// to another neighbor never lowers D_s when all SNRs are >= 1.
[[nodiscard]] inline CheckResult check_detach_inequality(int n, int trials,
                                                         std::uint64_t seed) {
  if (n < 3) throw DomainError("detach check needs at least three users");
  CheckResult res{"detach-never-decreases n=" + std::to_string(n), 0, 0};
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_seed(seed, 0, static_cast<std::uint64_t>(t)));
    const SnrProfile profile = detail::random_profile(n, rng, 1.0, 100.0);
    ClientGraph tree = sample_uniform_tree(n, rng);
    while (tree.degree(n) < 2) tree = sample_uniform_tree(n, rng);
    const auto& nb = tree.neighbors(n);
    // canonical indices sort by SNR, so the smallest neighbor index is the
    // minimum-SNR neighbor
    const int j = nb.front();
    const auto pick = 1 + uniform_below(rng, nb.size() - 1);
    const int i = nb[static_cast<std::size_t>(pick)];
    const ClientGraph moved = v_transform(tree, n, i, j);
    const double before = ds_product(tree, profile);
    const double after = ds_product(moved, profile);
    ++res.checked;
    if (after < before && !rates_close(after, before, 1e-9)) ++res.violations;
  }
  return res;
}

// Swap test: with the two top-SNR vertices both leaves, attached to v_i and
// v_j, exchanging their attachment points lowers-or-keeps D_s exactly when
// x_i >= x_j, and raises it otherwise.
[[nodiscard]] inline CheckResult check_swap_inequality(int n, int trials,
                                                       std::uint64_t seed) {
  if (n < 3) throw DomainError("swap check needs at least three users");
  CheckResult res{"swap-iff n=" + std::to_string(n), 0, 0};
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_seed(seed, 0, static_cast<std::uint64_t>(t)));
    const SnrProfile profile = detail::random_profile(n, rng, 1.0, 100.0);
    ClientGraph tree = sample_uniform_tree(n, rng);
    while (tree.degree(n) != 1 || tree.degree(n - 1) != 1)
      tree = sample_uniform_tree(n, rng);
    const int i = tree.neighbors(n).front();
    const int j = tree.neighbors(n - 1).front();
    std::vector<UserPair> swapped;
    swapped.reserve(tree.edges().size());
    for (UserPair e : tree.edges()) {
      if (e == normalized({n, i}))
        swapped.push_back(normalized({n, j}));
      else if (e == normalized({n - 1, j}))
        swapped.push_back(normalized({n - 1, i}));
      else
        swapped.push_back(e);
    }
    const ClientGraph exchanged(n, swapped);
    const double before = ds_product(tree, profile);
    const double after = ds_product(exchanged, profile);
    ++res.checked;
    const bool close = rates_close(after, before, 1e-9);
    if (profile.value(i) >= profile.value(j)) {
      if (after > before && !close) ++res.violations;
    } else {
      if (after < before || close) ++res.violations;
    }
  }
  return res;
}

// Observed optimal-minus-random gaps never exceed the analytic bounds, per
// trial, in the regime where the clamped and unclamped bounds agree.
[[nodiscard]] inline CheckResult check_gap_bounds(int n, int trials,
                                                  std::uint64_t seed) {
  CheckResult res{"gap-bounds n=" + std::to_string(n), 0, 0};
  const ClientGraph chain = build_client_graph(chain_ordering(n), n);
  const ClientGraph star = build_client_graph(star_ordering(n), n);
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_seed(seed, 0, static_cast<std::uint64_t>(t)));
    const SnrProfile profile = detail::random_profile(n, rng, 1.0, 100.0);
    const ClientGraph tree = sample_uniform_tree(n, rng);
    const GapBounds bounds = gap_bounds(profile);
    const double common_gap =
        evaluate(chain, profile, BoundKind::Exact).common_rate -
        evaluate(tree, profile, BoundKind::Exact).common_rate;
    const double sum_gap = evaluate(star, profile, BoundKind::Exact).sum_rate -
                           evaluate(tree, profile, BoundKind::Exact).sum_rate;
    ++res.checked;
    if (common_gap > bounds.common_gap_bound + 1e-9 ||
        sum_gap > bounds.sum_gap_bound + 1e-9)
      ++res.violations;
  }
  return res;
}

// At equal high SNR every tree performs alike: both observed gaps must be
// negligible (they are identically zero by symmetry).
[[nodiscard]] inline CheckResult check_gap_vanishing(int n, int trials,
                                                     std::uint64_t seed,
                                                     double snr = 1e6) {
  CheckResult res{"gap-vanishing n=" + std::to_string(n), 0, 0};
  const SnrProfile profile =
      canonicalize(std::vector<double>(static_cast<std::size_t>(n), snr));
  const ClientGraph chain = build_client_graph(chain_ordering(n), n);
  const ClientGraph star = build_client_graph(star_ordering(n), n);
  const double chain_common =
      evaluate(chain, profile, BoundKind::Exact).common_rate;
  const double star_sum = evaluate(star, profile, BoundKind::Exact).sum_rate;
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_seed(seed, 0, static_cast<std::uint64_t>(t)));
    const ClientGraph tree = sample_uniform_tree(n, rng);
    const RateReport report = evaluate(tree, profile, BoundKind::Exact);
    ++res.checked;
    if (chain_common - report.common_rate > 1e-4 ||
        star_sum - report.sum_rate > 1e-4)
      ++res.violations;
  }
  return res;
}

[[nodiscard]] inline std::vector<CheckResult> run_verification(
    const VerifyOptions& opts) {
  if (opts.n_min < 2 || opts.n_min > opts.n_max)
    throw DomainError("bad user-count range");
  if (opts.n_max > opts.cap)
    throw CapacityError("verification range exceeds the enumeration cap");
  if (opts.profiles_per_n < 1) throw DomainError("need at least one profile");
  std::vector<CheckResult> results;
  for (int n = opts.n_min; n <= opts.n_max; ++n) {
    const auto nn = static_cast<std::uint64_t>(n);
    if (n <= 8) results.push_back(check_feasible_iff_tree(n));
    results.push_back(check_prufer_roundtrip(n, opts.cap));
    results.push_back(
        check_chain_optimal(n, opts.profiles_per_n,
                            derive_seed(opts.seed, 1, nn), opts.cap));
    results.push_back(check_star_optimal(n, opts.profiles_per_n,
                                         derive_seed(opts.seed, 2, nn),
                                         opts.cap));
    results.push_back(check_closed_forms(n, opts.profiles_per_n,
                                         derive_seed(opts.seed, 3, nn)));
    if (n >= 3) {
      results.push_back(check_detach_inequality(n, opts.profiles_per_n,
                                                derive_seed(opts.seed, 4, nn)));
      results.push_back(check_swap_inequality(n, opts.profiles_per_n,
                                              derive_seed(opts.seed, 5, nn)));
    }
    results.push_back(
        check_gap_bounds(n, opts.profiles_per_n, derive_seed(opts.seed, 6, nn)));
    results.push_back(check_gap_vanishing(n, opts.profiles_per_n,
                                          derive_seed(opts.seed, 7, nn)));
  }
  return results;
}

[[nodiscard]] inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (r.violations != 0) return false;
  return true;
}

}  // namespace mwrc
