#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpb {

// Root of every error raised by the library. Subclasses name the violated
// contract so callers (and the CLI exit-code mapping) can dispatch on them.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class IncompatibleOperandsError : public Error {
 public:
  using Error::Error;
};

class RepresentationError : public Error {
 public:
  using Error::Error;
};

class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class BoundaryContaminationError : public Error {
 public:
  using Error::Error;
};

class PhaseUndefinedError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ResourceBoundError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace qpb
