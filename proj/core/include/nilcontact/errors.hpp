#pragma once

#include <stdexcept>
#include <string>

namespace nilcontact {

// Malformed or dimensionally inconsistent arguments.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its domain (y = 0, vector not in D, ...).
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// The cubic fails the surjectivity assumption on B and the caller needs it.
class AssumptionViolated : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

// A root system type the highest-root construction cannot handle.
class TypeRejected : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw InputError(std::string(what) + ": dimension mismatch (got " + std::to_string(got) +
                     ", expected " + std::to_string(want) + ")");
  }
}

}  // namespace nilcontact
