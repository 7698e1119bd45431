#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mwrc/client_graph.hpp"
#include "mwrc/errors.hpp"
#include "mwrc/snr_profile.hpp"

namespace mwrc {

// The relay decodes the sum of each scheduled pair, so a pair (i, j) limits
// user i to (1/(2m)) log2(x_i/(x_i + x_j) + x_i) bits per phase, m being the
// number of uplink phases. Exact clamps that at zero (a rate cannot be
// negative); Weak keeps the raw expression, which is what the optimality
// proofs manipulate.
enum class BoundKind { Exact, Weak };

enum class Objective { Common, Sum };

// Rates agreeing to one part in 1e12 are treated as equal; ties between
// orderings at this tolerance are reported as co-optimal rather than broken
// arbitrarily.
inline constexpr double kRateTolerance = 1e-12;

[[nodiscard]] inline bool rates_close(double a, double b,
                                      double rel = kRateTolerance) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

[[nodiscard]] inline double pair_rate_bound(double x_i, double x_j, int m,
                                            BoundKind kind) {
  if (!(x_i > 0.0) || !(x_j > 0.0))
    throw DomainError("pair rate bound needs positive SNRs");
  if (m < 1) throw DomainError("phase count must be at least 1");
  const double raw = std::log2(x_i / (x_i + x_j) + x_i) / (2.0 * m);
  return kind == BoundKind::Exact ? std::max(0.0, raw) : raw;
}

// Every pairing of user i constrains its rate; the tightest constraint comes
// from the highest-SNR neighbor (the bound decreases in the partner's SNR).
// Vertices are canonical indices into the profile. Uses m = N - 1, the phase
// count of a tree ordering.
[[nodiscard]] inline double user_rate(const ClientGraph& graph, int i,
                                      const SnrProfile& profile,
                                      BoundKind kind) {
  if (graph.vertex_count() != profile.size())
    throw DomainError("graph and SNR profile sizes differ");
  const auto& nb = graph.neighbors(i);
  if (nb.empty()) throw DomainError("user participates in no pair");
  const int m = graph.vertex_count() - 1;
  double best = pair_rate_bound(profile.value(i), profile.value(nb.front()), m, kind);
  for (std::size_t t = 1; t < nb.size(); ++t)
    best = std::min(
        best, pair_rate_bound(profile.value(i), profile.value(nb[t]), m, kind));
  return best;
}

struct RateReport {
  std::vector<double> per_user;  // canonical order, index 0 = lowest SNR
  double common_rate = 0.0;      // min of per_user
  double sum_rate = 0.0;         // sum of per_user, left to right
  BoundKind bound_kind = BoundKind::Exact;
  int m = 0;                     // phase count used in the 1/(2m) prefactor
};

[[nodiscard]] inline RateReport evaluate(const ClientGraph& graph,
                                         const SnrProfile& profile,
                                         BoundKind kind) {
  if (graph.vertex_count() != profile.size())
    throw DomainError("graph and SNR profile sizes differ");
  if (!is_tree(graph))
    throw DomainError("ordering is not a tree over the users");
  const int n = graph.vertex_count();
  RateReport report;
  report.bound_kind = kind;
  report.m = n - 1;
  report.per_user.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    report.per_user.push_back(user_rate(graph, i, profile, kind));
  report.common_rate = *std::min_element(report.per_user.begin(),
                                         report.per_user.end());
  double sum = 0.0;
  for (double r : report.per_user) sum += r;
  report.sum_rate = sum;
  return report;
}

// d_i = 2^{2(N-1) R_i}, the sum-rate proofs' exponentiated rate. Products of
// d values compare like sums of rates but avoid signs.
[[nodiscard]] inline double d_value(double rate, int n) {
  if (n < 2) throw DomainError("d value needs at least two users");
  return std::exp2(2.0 * (n - 1) * rate);
}

// D_s = prod_i d_i = 2^{2(N-1) S_R} under the weak bound.
[[nodiscard]] inline double ds_product(const ClientGraph& graph,
                                       const SnrProfile& profile) {
  if (graph.vertex_count() != profile.size())
    throw DomainError("graph and SNR profile sizes differ");
  if (!is_tree(graph))
    throw DomainError("ordering is not a tree over the users");
  const int n = graph.vertex_count();
  double product = 1.0;
  for (int i = 1; i <= n; ++i)
    product *= d_value(user_rate(graph, i, profile, BoundKind::Weak), n);
  return product;
}

// Any feasible ordering, tree or not: M phases give every pair bound the
// 1/(2M) prefactor, so repeated pairs waste phases and lower every rate.
// Coincides with evaluate() on duplicate-free tree orderings (M = N - 1).
[[nodiscard]] inline RateReport evaluate_ordering(const Ordering& ordering,
                                                  const SnrProfile& profile,
                                                  BoundKind kind) {
  const int n = profile.size();
  const ClientGraph graph = build_client_graph(ordering, n);
  if (!is_feasible(graph))
    throw DomainError("ordering is not feasible (client graph disconnected)");
  const int m = ordering.phase_count();
  RateReport report;
  report.bound_kind = kind;
  report.m = m;
  report.per_user.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto& nb = graph.neighbors(i);
    double best =
        pair_rate_bound(profile.value(i), profile.value(nb.front()), m, kind);
    for (std::size_t t = 1; t < nb.size(); ++t)
      best = std::min(best, pair_rate_bound(profile.value(i),
                                            profile.value(nb[t]), m, kind));
    report.per_user.push_back(best);
  }
  report.common_rate =
      *std::min_element(report.per_user.begin(), report.per_user.end());
  double sum = 0.0;
  for (double r : report.per_user) sum += r;
  report.sum_rate = sum;
  return report;
}

// Orderings arrive over the caller's user numbering; the library computes
// over canonical (SNR-sorted) indices. These translate between the two.
[[nodiscard]] inline Ordering relabel_to_canonical(const Ordering& ordering,
                                                   const SnrProfile& profile) {
  Ordering out;
  out.pairs.reserve(ordering.pairs.size());
  for (UserPair p : ordering.pairs)
    out.pairs.push_back(
        {profile.canonical_index(p.a), profile.canonical_index(p.b)});
  return out;
}

[[nodiscard]] inline Ordering relabel_to_original(const Ordering& ordering,
                                                  const SnrProfile& profile) {
  Ordering out;
  out.pairs.reserve(ordering.pairs.size());
  for (UserPair p : ordering.pairs)
    out.pairs.push_back(
        {profile.original_label(p.a), profile.original_label(p.b)});
  return out;
}

}  // namespace mwrc
