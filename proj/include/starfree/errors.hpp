#pragma once

#include <stdexcept>
#include <string>

namespace starfree {

// Input text that does not follow a documented grammar.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid input that violates a documented precondition.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance exceeds a configured size cap of an exact engine.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace starfree
