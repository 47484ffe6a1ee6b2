#pragma once

#include <stdexcept>
#include <string>

namespace derpair {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimension or arity mismatch between operands.
struct ShapeError : Error {
  using Error::Error;
};

// Operands live on different based spaces.
struct SpaceMismatch : Error {
  using Error::Error;
};

// Malformed or incomplete input (missing product, bad kind, bad file).
struct SchemaError : Error {
  using Error::Error;
};

struct UnsupportedRole : Error {
  using Error::Error;
};

// A computation would exceed the configured coordinate budget.
struct ResourceError : Error {
  using Error::Error;
};

// An input failed the structure or operator check an operation requires.
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace derpair
