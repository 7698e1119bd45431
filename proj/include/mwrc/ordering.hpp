#pragma once

#include <vector>

namespace mwrc {

// Unordered pair of 1-based user indices. The a/b orientation is kept exactly
// as written so serialization round-trips are faithful; code that cares about
// the edge itself should compare through normalized() or same_edge().
struct UserPair {
  int a = 0;
  int b = 0;

  friend bool operator==(const UserPair&, const UserPair&) = default;
};

[[nodiscard]] constexpr UserPair normalized(UserPair p) noexcept {
  return p.a <= p.b ? p : UserPair{p.b, p.a};
}

[[nodiscard]] constexpr bool same_edge(UserPair p, UserPair q) noexcept {
  const UserPair np = normalized(p);
  const UserPair nq = normalized(q);
  return np.a == nq.a && np.b == nq.b;
}

// An uplink schedule: one user pair per phase. For minimal feasible schedules
// over N users this has exactly N - 1 pairs, but the type itself allows any
// M >= 1 (duplicates included) so arbitrary schedules can be inspected.
struct Ordering {
  std::vector<UserPair> pairs;

  [[nodiscard]] int phase_count() const noexcept {
    return static_cast<int>(pairs.size());
  }

  friend bool operator==(const Ordering&, const Ordering&) = default;
};

}  // namespace mwrc
