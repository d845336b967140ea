#pragma once

#include <stdexcept>
#include <string>

namespace ggslab {

/// Malformed input: bad spec strings, words, vertices, mismatched moduli.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (e.g. psi of a non-stabilizer).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured scale guard or search cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check disagreed. Always a bug or a counterexample.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ggslab
