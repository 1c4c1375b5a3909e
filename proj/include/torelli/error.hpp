#pragma once

#include <stdexcept>
#include <string>

namespace torelli {

// Inputs violate a documented precondition of the called operation.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result failed its own postcondition check. Always a bug or a numeric failure.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bounded search terminated without finding what it was looking for.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace torelli
