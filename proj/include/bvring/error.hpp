#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bvring {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index, divisor label or permutation outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Operation needs a homogeneous element of a particular codegree.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Operands built over different ring parameters.
class ParamsMismatch : public Error {
 public:
  ParamsMismatch() : Error("ring elements have different parameters") {}
};

/// A requested computation exceeds the configured size bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace bvring
