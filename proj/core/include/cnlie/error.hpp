#pragma once

#include <stdexcept>
#include <string>

namespace cnlie {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatch between operands (ambient dimensions, matrix sizes).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input: rationals, JSON, family specs.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Parameters outside the admissible range of a constructor or operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A resource guard refused the computation (e.g. cochain systems too large).
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace cnlie
