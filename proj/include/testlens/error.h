#ifndef TESTLENS_ERROR_H_
#define TESTLENS_ERROR_H_

#include <stdexcept>
#include <string>

namespace testlens {

// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed identifier, malformed data file, bad argument value.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Bad command-line usage or an unsupported output format.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace testlens

#endif  // TESTLENS_ERROR_H_
