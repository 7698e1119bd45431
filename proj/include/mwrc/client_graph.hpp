#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "mwrc/errors.hpp"
#include "mwrc/ordering.hpp"

namespace mwrc {

// Undirected simple graph on users 1..N: one vertex per user, one edge per
// scheduled pair. Edges are stored normalized (a < b) and sorted; repeated
// input edges collapse to a single edge. Immutable after construction.
class ClientGraph {
 public:
  ClientGraph(int vertex_count, std::span<const UserPair> edge_list)
      : vertex_count_(vertex_count) {
    if (vertex_count < 2) throw DomainError("a client graph needs at least two users");
    edges_.reserve(edge_list.size());
    for (UserPair p : edge_list) {
      if (p.a == p.b) throw DomainError("a user cannot be paired with itself");
      if (p.a < 1 || p.a > vertex_count || p.b < 1 || p.b > vertex_count)
        throw DomainError("user index out of range");
      edges_.push_back(normalized(p));
    }
    std::sort(edges_.begin(), edges_.end(), [](UserPair lhs, UserPair rhs) {
      return lhs.a != rhs.a ? lhs.a < rhs.a : lhs.b < rhs.b;
    });
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adjacency_.assign(static_cast<std::size_t>(vertex_count) + 1, {});
    for (UserPair e : edges_) {
      adjacency_[static_cast<std::size_t>(e.a)].push_back(e.b);
      adjacency_[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  }

  [[nodiscard]] int vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] int edge_count() const noexcept {
    return static_cast<int>(edges_.size());
  }

  // Normalized (a < b) edges in lexicographic order.
  [[nodiscard]] const std::vector<UserPair>& edges() const noexcept {
    return edges_;
  }

  // Neighbor indices of vertex v in ascending order.
  [[nodiscard]] const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
  }

  [[nodiscard]] int degree(int v) const {
    return static_cast<int>(neighbors(v).size());
  }

  [[nodiscard]] bool has_edge(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    const auto& nb = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  friend bool operator==(const ClientGraph& lhs, const ClientGraph& rhs) {
    return lhs.vertex_count_ == rhs.vertex_count_ && lhs.edges_ == rhs.edges_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 1 || v > vertex_count_) throw DomainError("vertex index out of range");
  }

  int vertex_count_ = 0;
  std::vector<UserPair> edges_;
  std::vector<std::vector<int>> adjacency_;  // slot 0 unused, vertices 1-based
};

// Connectivity is exactly the condition for every user to recover all other
// messages from its own data plus the relayed pair sums: any cycle edge is
// redundant (its equation is the sum of the rest of the cycle), so extra
// edges never help feasibility and a disconnected component is never
// decodable across the cut.
[[nodiscard]] inline bool is_feasible(const ClientGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : graph.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

[[nodiscard]] inline bool is_tree(const ClientGraph& graph) {
  return graph.edge_count() == graph.vertex_count() - 1 && is_feasible(graph);
}

// Builds the client graph of an ordering over n users. Duplicate pairs
// collapse to one edge; when `collapsed` is non-null each repeated pair is
// reported there (as written in the ordering).
[[nodiscard]] inline ClientGraph build_client_graph(
    const Ordering& ordering, int n, std::vector<UserPair>* collapsed = nullptr) {
  if (n < 2) throw DomainError("a client graph needs at least two users");
  if (ordering.pairs.empty()) throw DomainError("ordering has no pairs");
  if (collapsed != nullptr) {
    collapsed->clear();
    std::vector<UserPair> seen;
    for (UserPair p : ordering.pairs) {
      const UserPair key = normalized(p);
      const bool dup = std::find(seen.begin(), seen.end(), key) != seen.end();
      if (dup)
        collapsed->push_back(p);
      else
        seen.push_back(key);
    }
  }
  return ClientGraph(n, ordering.pairs);
}

}  // namespace mwrc
