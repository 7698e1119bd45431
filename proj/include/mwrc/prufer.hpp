#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "mwrc/client_graph.hpp"
#include "mwrc/errors.hpp"
#include "mwrc/rate.hpp"
#include "mwrc/rng.hpp"
#include "mwrc/snr_profile.hpp"

namespace mwrc {

// Labeled trees on n vertices are in bijection with sequences of n-2 labels
// (Cayley's n^{n-2} count), which makes exhaustive enumeration and exact
// uniform sampling of tree orderings straightforward.
struct PruferCode {
  std::vector<int> labels;  // length n-2, entries in 1..n

  friend bool operator==(const PruferCode&, const PruferCode&) = default;
};

// Guards the n^{n-2} blowup; 9^7 is about 4.8M trees, still seconds-scale.
inline constexpr int kDefaultEnumerationCap = 9;

namespace detail {

// Standard decode: the code lists, for each smallest-leaf elimination step,
// the eliminated leaf's neighbor. Runs the elimination forward with a moving
// pointer; appends the n-1 edges to `edges` in elimination order.
inline void decode_edges(const PruferCode& code, int n,
                         std::vector<UserPair>& edges) {
  if (n < 2) throw DomainError("a tree needs at least two vertices");
  if (static_cast<int>(code.labels.size()) != n - 2)
    throw DomainError("code length must be n - 2");
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int c : code.labels) {
    if (c < 1 || c > n) throw DomainError("code label out of range");
    ++degree[static_cast<std::size_t>(c)];
  }
  edges.clear();
  edges.reserve(static_cast<std::size_t>(n) - 1);
  int ptr = 1;
  while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int c : code.labels) {
    edges.push_back({leaf, c});
    if (--degree[static_cast<std::size_t>(c)] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n});
}

}  // namespace detail

[[nodiscard]] inline ClientGraph prufer_decode(const PruferCode& code, int n) {
  std::vector<UserPair> edges;
  detail::decode_edges(code, n, edges);
  return ClientGraph(n, edges);
}

// Inverse of decode: repeatedly strip the smallest leaf, recording its
// neighbor. Quadratic scan, fine at enumeration scale.
[[nodiscard]] inline PruferCode prufer_encode(const ClientGraph& graph) {
  if (!is_tree(graph)) throw DomainError("only trees have a code");
  const int n = graph.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v)
    degree[static_cast<std::size_t>(v)] = graph.degree(v);
  PruferCode code;
  code.labels.reserve(static_cast<std::size_t>(n) - 2);
  for (int step = 0; step < n - 2; ++step) {
    int leaf = 0;
    for (int v = 1; v <= n; ++v)
      if (!removed[static_cast<std::size_t>(v)] &&
          degree[static_cast<std::size_t>(v)] == 1) {
        leaf = v;
        break;
      }
    int parent = 0;
    for (int w : graph.neighbors(leaf))
      if (!removed[static_cast<std::size_t>(w)]) {
        parent = w;
        break;
      }
    code.labels.push_back(parent);
    removed[static_cast<std::size_t>(leaf)] = 1;
    --degree[static_cast<std::size_t>(parent)];
  }
  return code;
}

// Visits every code of length n-2 in lexicographic order: all n^{n-2} trees,
// each exactly once.
template <typename Visitor>
void for_each_code(int n, Visitor&& visit, int cap = kDefaultEnumerationCap) {
  if (n < 2) throw DomainError("a tree needs at least two vertices");
  if (n > cap)
    throw CapacityError(
        "tree enumeration capped; raise the cap to go past n = " +
        std::to_string(cap));
  PruferCode code;
  code.labels.assign(static_cast<std::size_t>(n) - 2, 1);
  while (true) {
    visit(static_cast<const PruferCode&>(code));
    int pos = n - 3;
    while (pos >= 0 && code.labels[static_cast<std::size_t>(pos)] == n) {
      code.labels[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++code.labels[static_cast<std::size_t>(pos)];
  }
}

template <typename Visitor>
void for_each_tree(int n, Visitor&& visit, int cap = kDefaultEnumerationCap) {
  for_each_code(
      n, [&](const PruferCode& code) { visit(code, prufer_decode(code, n)); },
      cap);
}

[[nodiscard]] inline std::uint64_t tree_count(int n) {
  if (n < 2) throw DomainError("a tree needs at least two vertices");
  std::uint64_t count = 1;
  for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
  return count;
}

struct BruteForceResult {
  double best_value = 0.0;
  std::vector<PruferCode> co_optimal;  // every tree within tolerance of best
};

namespace detail {

// Objective of one tree straight from its edge list; reproduces evaluate()'s
// arithmetic (same pair bounds, min per user, left-to-right sum over users)
// so closed forms compare exactly against this.
[[nodiscard]] inline double objective_from_edges(
    const std::vector<UserPair>& edges, const SnrProfile& profile,
    Objective objective, BoundKind kind, std::vector<double>& per_user) {
  const int n = profile.size();
  const int m = n - 1;
  per_user.assign(static_cast<std::size_t>(n) + 1,
                  std::numeric_limits<double>::infinity());
  for (UserPair e : edges) {
    const double xa = profile.value(e.a);
    const double xb = profile.value(e.b);
    double& ra = per_user[static_cast<std::size_t>(e.a)];
    double& rb = per_user[static_cast<std::size_t>(e.b)];
    ra = std::min(ra, pair_rate_bound(xa, xb, m, kind));
    rb = std::min(rb, pair_rate_bound(xb, xa, m, kind));
  }
  if (objective == Objective::Common) {
    double worst = per_user[1];
    for (int i = 2; i <= n; ++i)
      worst = std::min(worst, per_user[static_cast<std::size_t>(i)]);
    return worst;
  }
  double sum = 0.0;
  for (int i = 1; i <= n; ++i) sum += per_user[static_cast<std::size_t>(i)];
  return sum;
}

}  // namespace detail

// Exhaustive maximum of the objective over all labeled trees, with every tree
// tying the maximum (to relative 1e-12) collected as co-optimal. Ground truth
// for the constructive orderings. Two passes keep the co-optimal set exact
// without holding any per-tree state.
[[nodiscard]] inline BruteForceResult brute_force_best(
    const SnrProfile& profile, Objective objective, BoundKind kind,
    int cap = kDefaultEnumerationCap) {
  const int n = profile.size();
  BruteForceResult result;
  result.best_value = -std::numeric_limits<double>::infinity();
  std::vector<UserPair> edges;
  std::vector<double> scratch;
  for_each_code(
      n,
      [&](const PruferCode& code) {
        detail::decode_edges(code, n, edges);
        result.best_value =
            std::max(result.best_value,
                     detail::objective_from_edges(edges, profile, objective,
                                                  kind, scratch));
      },
      cap);
  for_each_code(
      n,
      [&](const PruferCode& code) {
        detail::decode_edges(code, n, edges);
        const double value = detail::objective_from_edges(
            edges, profile, objective, kind, scratch);
        if (value == result.best_value || rates_close(value, result.best_value))
          result.co_optimal.push_back(code);
      },
      cap);
  return result;
}

// Uniform over all n^{n-2} trees: uniform code, then decode.
[[nodiscard]] inline ClientGraph sample_uniform_tree(int n, SplitMix64& rng) {
  if (n < 2) throw DomainError("a tree needs at least two vertices");
  PruferCode code;
  code.labels.reserve(static_cast<std::size_t>(n) - 2);
  for (int i = 0; i < n - 2; ++i)
    code.labels.push_back(
        static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n))) +
        1);
  return prufer_decode(code, n);
}

}  // namespace mwrc
