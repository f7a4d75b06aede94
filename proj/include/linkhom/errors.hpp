#pragma once

#include <stdexcept>
#include <string>

namespace linkhom {

/// Malformed or inconsistent user input (inhomogeneous data, ring mismatch, bad index).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Free-module shapes or degree twists that do not fit together.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on data that does not satisfy its documented precondition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace linkhom
