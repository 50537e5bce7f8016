#pragma once

#include <stdexcept>
#include <string>

namespace tokslide {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph, instance, expression or move file, or an argument that
// violates a documented precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// A solver was given an instance it does not handle (wrong problem kind,
// disconnected graph, non-split graph, ...).
class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace tokslide
