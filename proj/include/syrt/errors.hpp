#pragma once

#include <stdexcept>
#include <string>

namespace syrt {

// Error taxonomy shared by the library and the CLI exit codes:
// parse/domain problems come from user input, resource limits from size
// caps, internal errors from broken invariants (never expected).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace syrt
