#pragma once

#include <stdexcept>

namespace mwrc {

// Invalid domain input: bad SNRs, malformed orderings, infeasible graphs.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request would blow through a combinatorial resource guard, e.g. asking
// for an exhaustive tree search above the enumeration cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mwrc
