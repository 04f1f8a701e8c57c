#pragma once

#include <stdexcept>
#include <string>

namespace seaweed {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent caller input (bad compositions, parse failures).
class InputError : public Error {
 public:
  using Error::Error;
};

// Vectors, forms or subspaces living in different ambient dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Structure constants that fail antisymmetry, Jacobi, or realization checks.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace seaweed
