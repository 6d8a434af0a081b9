#pragma once

#include <stdexcept>
#include <string>

namespace privcoal {

// Base for every error the library reports. The CLI maps each subclass onto
// a stable exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments: malformed tracks, out-of-range indices, violated
// parameter inequalities.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// A participant subset asked for a secret it is not authorized to learn.
class AuthorizationError : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation would exceed the desk-scale guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace privcoal
