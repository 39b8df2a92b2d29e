#pragma once

#include <stdexcept>
#include <string>

namespace wald {

// Malformed or out-of-range input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An identity that must hold by theorem failed. Carries a human-readable
// description of the counterexample.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wald
