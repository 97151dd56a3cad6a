#pragma once

#include <stdexcept>
#include <string>

namespace gvz {

/// Malformed or inconsistent input (bad permutation, wrong parent group, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size or search bound was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The hypothesis of a definition or theorem does not hold for the input.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant that must hold for correct code was violated.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A verified statement turned out false on a concrete group.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gvz
