#pragma once

#include <stdexcept>
#include <string>

namespace hamsense {

// Bad parameters or malformed input (digit >= m, duplicate grid nodes, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or search would exceed its configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied guarantee does not hold (e.g. lifted degree above the cap).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A bound formula was asked for outside the range where it says anything.
class BoundNotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Something the mathematics guarantees did not happen. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hamsense
