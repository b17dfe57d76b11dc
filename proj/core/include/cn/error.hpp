#pragma once

#include <stdexcept>
#include <string>

namespace cn {

// Raised when input is malformed (bad index, bad literal, bad file), as
// opposed to well-formed input that violates a mathematical condition.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation's precondition does not hold for a well-formed
// input (e.g. converting a map that is not a union of equicardinal maps).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cn
