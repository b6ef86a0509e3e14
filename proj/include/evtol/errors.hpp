#pragma once

#include <stdexcept>
#include <string>

namespace evtol {

// A requested leg exceeds the aircraft's maximum range.
struct RangeExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operational constraint (battery, parking, route closure) was violated.
// Unreachable from any action sequence drawn through the feasibility mask.
struct ConstraintViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was invoked in a state that does not admit it.
struct StateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Required data (fare entry, checkpoint field) is missing or malformed.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A scenario configuration cannot be instantiated.
struct InfeasibleConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The episode reward has a zero denominator.
struct UndefinedRewardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration request exceeds its stated budget.
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace evtol
