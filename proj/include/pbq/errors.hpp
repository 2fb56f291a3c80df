#pragma once

#include <stdexcept>
#include <string>

namespace pbq {

// Malformed or out-of-range input (bad vector length, eps outside (0,1], ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented operation precondition was violated by the caller.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two objects cannot be combined (dimension or eps-family mismatch).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Request exceeds a practical enumeration cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pbq
