#pragma once

#include <stdexcept>
#include <string>

namespace aiii {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input: duplicate entries, inconsistent sizes, bad strings.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Input is well formed but exceeds a configured enumeration bound.
class RefusalError : public Error {
public:
  using Error::Error;
};

// A consistency check that the theory guarantees has failed.
class InternalError : public Error {
public:
  using Error::Error;
};

// Random sampling did not produce comparable generic results.
class GenericityError : public Error {
public:
  using Error::Error;
};

}  // namespace aiii
