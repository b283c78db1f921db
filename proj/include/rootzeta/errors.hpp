#pragma once

#include <stdexcept>

namespace rootzeta {

/// Raised when an argument is outside the documented domain of an operation
/// (bad rank, root not in the table, occupancy out of bounds, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation has no meaning for the given root system family,
/// e.g. ambient coordinates or closed forms for an exceptional type.
class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two independent computations of the same quantity disagree.
class Discrepancy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rootzeta
