#pragma once

#include <stdexcept>
#include <string>

namespace spikelv {

/// Base for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad parameter, short train).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input data could not be read or is inconsistent.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace spikelv
