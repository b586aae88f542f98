#pragma once

#include <stdexcept>
#include <string>

namespace subshift {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad alphabets, unknown symbols, out-of-range parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A word that was required to be in the language is not.
class NotInLanguage : public Error {
 public:
  using Error::Error;
};

// A subset construction exceeded SUBSHIFT_MAX_SUBSETS.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace subshift
