#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include "mwrc/errors.hpp"

namespace mwrc {

class SnrProfile;
[[nodiscard]] SnrProfile canonicalize(std::span<const double> raw_snrs);

// Per-user SNRs in linear scale, sorted nondecreasing. Canonical user i
// (1-based) is the user with the i-th smallest SNR; original_label(i) is the
// position that user held in the input sequence, so results can be reported
// back in the caller's numbering. Immutable after construction.
class SnrProfile {
 public:
  [[nodiscard]] int size() const noexcept {
    return static_cast<int>(values_.size());
  }

  // SNR of canonical user i, 1-based.
  [[nodiscard]] double value(int i) const {
    check_index(i);
    return values_[static_cast<std::size_t>(i - 1)];
  }

  // Input position (1-based) of canonical user i.
  [[nodiscard]] int original_label(int i) const {
    check_index(i);
    return original_label_[static_cast<std::size_t>(i - 1)];
  }

  // Canonical index of the user supplied at input position `original`.
  [[nodiscard]] int canonical_index(int original) const {
    if (original < 1 || original > size())
      throw DomainError("user position out of range");
    return canonical_index_[static_cast<std::size_t>(original - 1)];
  }

  // Sorted values; values()[k] is the SNR of canonical user k + 1.
  [[nodiscard]] const std::vector<double>& values() const noexcept {
    return values_;
  }

  friend SnrProfile canonicalize(std::span<const double> raw_snrs);

 private:
  SnrProfile() = default;

  void check_index(int i) const {
    if (i < 1 || i > size()) throw DomainError("user index out of range");
  }

  std::vector<double> values_;
  std::vector<int> original_label_;   // canonical -> input position
  std::vector<int> canonical_index_;  // input position -> canonical
};

// Sorts SNRs nondecreasing and records the permutation back to the input
// positions. The sort is stable, so equal SNRs keep their input order.
[[nodiscard]] inline SnrProfile canonicalize(std::span<const double> raw_snrs) {
  const int n = static_cast<int>(raw_snrs.size());
  if (n < 2) throw DomainError("an SNR profile needs at least two users");
  for (double v : raw_snrs) {
    if (!std::isfinite(v) || v <= 0.0)
      throw DomainError("SNR values must be positive and finite");
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    return raw_snrs[static_cast<std::size_t>(lhs)] <
           raw_snrs[static_cast<std::size_t>(rhs)];
  });

  SnrProfile profile;
  profile.values_.reserve(static_cast<std::size_t>(n));
  profile.original_label_.reserve(static_cast<std::size_t>(n));
  profile.canonical_index_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const int src = order[static_cast<std::size_t>(i)];
    profile.values_.push_back(raw_snrs[static_cast<std::size_t>(src)]);
    profile.original_label_.push_back(src + 1);
    profile.canonical_index_[static_cast<std::size_t>(src)] = i + 1;
  }
  return profile;
}

[[nodiscard]] inline SnrProfile canonicalize(std::initializer_list<double> raw_snrs) {
  return canonicalize(std::span<const double>(raw_snrs.begin(), raw_snrs.size()));
}

}  // namespace mwrc
