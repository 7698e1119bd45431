#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mwrc/client_graph.hpp"
#include "mwrc/errors.hpp"
#include "mwrc/ordering.hpp"
#include "mwrc/rate.hpp"
#include "mwrc/snr_profile.hpp"

namespace mwrc {

// Path over SNR-sorted users: {1,2},{2,3},...,{n-1,n}. Maximizes the common
// rate among all tree orderings under the weak bound.
[[nodiscard]] inline Ordering chain_ordering(int n) {
  if (n < 2) throw DomainError("an ordering needs at least two users");
  Ordering out;
  out.pairs.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 1; i < n; ++i) out.pairs.push_back({i, i + 1});
  return out;
}

// Star at the lowest-SNR user: {2,1},{3,1},...,{n,1}. Maximizes the sum rate
// under the weak bound.
[[nodiscard]] inline Ordering star_ordering(int n) {
  if (n < 2) throw DomainError("an ordering needs at least two users");
  Ordering out;
  out.pairs.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 2; i <= n; ++i) out.pairs.push_back({i, 1});
  return out;
}

// Best achievable common rate: the chain's binding constraint is the lower
// endpoint of each chain edge, so the maximum is
//   min over i < n of (1/(2(n-1))) log2(x_i + x_i/(x_i + x_{i+1})).
// Shares the arithmetic of evaluate(chain, Weak), so the two agree exactly.
[[nodiscard]] inline double max_common_rate_closed_form(
    const SnrProfile& profile) {
  const int n = profile.size();
  double best = pair_rate_bound(profile.value(1), profile.value(2), n - 1,
                                BoundKind::Weak);
  for (int i = 2; i < n; ++i)
    best = std::min(best, pair_rate_bound(profile.value(i), profile.value(i + 1),
                                          n - 1, BoundKind::Weak));
  return best;
}

// Best achievable sum rate, from the star at user 1: user 1 is bound by its
// highest-SNR partner x_n, everyone else by x_1, each term floored at zero
// (the max{1, d_i} clamp of the closed form). With no clamp active this is
// term for term the arithmetic of evaluate(star, Weak).sum_rate.
[[nodiscard]] inline double max_sum_rate_closed_form(const SnrProfile& profile) {
  const int n = profile.size();
  double sum = 0.0;
  for (int i = 1; i <= n; ++i) {
    const int partner = i == 1 ? n : 1;
    sum += std::max(0.0, pair_rate_bound(profile.value(i),
                                         profile.value(partner), n - 1,
                                         BoundKind::Weak));
  }
  return sum;
}

// True when some star term clamps, i.e. the closed form and the unclamped
// evaluate(star, Weak) sum diverge. Only happens at low SNR.
[[nodiscard]] inline bool sum_clamp_active(const SnrProfile& profile) {
  const int n = profile.size();
  for (int i = 1; i <= n; ++i) {
    const int partner = i == 1 ? n : 1;
    if (pair_rate_bound(profile.value(i), profile.value(partner), n - 1,
                        BoundKind::Weak) < 0.0)
      return true;
  }
  return false;
}

// Edge rewrite V(G, i, j, k): replace edge i-k by j-k. Needs i-j and i-k
// present and k != j. Rewrites a tree into a tree; the proofs use it to move
// neighbors off the highest-SNR vertex without losing connectivity.
[[nodiscard]] inline ClientGraph v_transform(const ClientGraph& graph, int i,
                                             int j, int k) {
  if (k == j) throw DomainError("v-transform endpoints j and k must differ");
  if (!graph.has_edge(i, j) || !graph.has_edge(i, k))
    throw DomainError("v-transform needs edges i-j and i-k present");
  std::vector<UserPair> edges;
  edges.reserve(graph.edges().size());
  const UserPair removed = normalized({i, k});
  for (UserPair e : graph.edges())
    if (e != removed) edges.push_back(e);
  edges.push_back(normalized({j, k}));
  return ClientGraph(graph.vertex_count(), edges);
}

// The clamped and unclamped bounds agree on every tree exactly when the
// lowest-SNR user clears zero against the highest, x_1 + x_1/(x_1+x_n) >= 1.
// All SNRs >= 1 is the simple sufficient case.
[[nodiscard]] inline bool weak_bound_equivalent(const SnrProfile& profile) {
  const double x1 = profile.value(1);
  const double xn = profile.value(profile.size());
  return x1 + x1 / (x1 + xn) >= 1.0;
}

// How far a random tree ordering can fall short of the optimal one. Both
// bounds vanish as SNRs grow together, which is why ordering stops mattering
// at high SNR.
struct GapBounds {
  double common_gap_bound = 0.0;
  double sum_gap_bound = 0.0;
};

[[nodiscard]] inline GapBounds gap_bounds(const SnrProfile& profile) {
  const int n = profile.size();
  const double x1 = profile.value(1);
  const double xn = profile.value(n);
  GapBounds out;
  out.common_gap_bound =
      std::log2((1.0 + 2.0 * xn) / (2.0 * x1)) / (2.0 * (n - 1));
  out.sum_gap_bound =
      0.5 * std::log2(xn * (1.0 + 2.0 * x1) / (x1 * (1.0 + 2.0 * xn)));
  return out;
}

}  // namespace mwrc
