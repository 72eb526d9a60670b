#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skeintorus {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact division left a remainder.  Always a hard error, never truncated.
struct ExactDivisionFailure : Error {
  using Error::Error;
};

// Operands live over different ground rings (symbolic vs cyclotomic, or
// cyclotomic rings of different order).
struct ContextMismatch : Error {
  using Error::Error;
};

struct TorusMismatch : Error {
  using Error::Error;
};

struct MissingLabel : Error {
  using Error::Error;
};

struct MatrixScaleMismatch : Error {
  using Error::Error;
};

struct InvalidQuasitriangulation : Error {
  using Error::Error;
};

struct NotFlippable : Error {
  using Error::Error;
};

struct NegativeFlippedExponent : Error {
  using Error::Error;
};

struct NotBoundaryEdge : Error {
  using Error::Error;
};

struct NotUnmarked : Error {
  using Error::Error;
};

struct NonInvertibleImage : Error {
  using Error::Error;
};

struct ContextError : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

struct EmptySurface : Error {
  using Error::Error;
};

struct UnknownGenerator : Error {
  using Error::Error;
};

}  // namespace skeintorus
