#pragma once

#include <stdexcept>

namespace eqhom {

/// Thrown for malformed user input (files, flags, shapes).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an internal identity fails to verify. Never expected on valid
/// input; signals a bug rather than a user mistake.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eqhom
