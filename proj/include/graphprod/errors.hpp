#pragma once

#include <stdexcept>
#include <string>

namespace gp {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed documents, out-of-range values, mismatched contexts.
struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

// An operation that requires enumerating an infinite vertex group.
struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

// A stated precondition does not hold (non-peripheral family, graph is a
// star, vertex on the ball boundary, ...).
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Conjugating data that fails to be induced by an isomorphism.
struct NotIsomorphismError : Error {
  explicit NotIsomorphismError(const std::string& what) : Error(what) {}
};

}  // namespace gp
