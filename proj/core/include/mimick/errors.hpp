#pragma once

#include <stdexcept>

namespace mimick {

/// Invalid graph, partition, terminal subset or parameter supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration was asked to run past its size guard.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace mimick
