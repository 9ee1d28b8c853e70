#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

/// Base class for all domain errors raised by the toolkit.
/// Input-syntax problems derive from ParseError instead; the CLI maps
/// ParseError to exit code 1 and Error to exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct GraphError : Error {
  using Error::Error;
};
struct UnknownVertex : Error {
  using Error::Error;
};
struct NotAnEliminableSource : Error {
  using Error::Error;
};
struct NotRegular : Error {
  using Error::Error;
};
struct NonSquare : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct UnsupportedInfiniteGroup : Error {
  using Error::Error;
};
struct SearchCapExceeded : Error {
  using Error::Error;
};
struct RankMismatch : Error {
  using Error::Error;
};
struct NotAnIsomorphism : Error {
  using Error::Error;
};
struct KernelNonzero : Error {
  using Error::Error;
};
struct NotEquivariant : Error {
  using Error::Error;
};
struct MissingDegree : Error {
  using Error::Error;
};
struct AmbientMismatch : Error {
  using Error::Error;
};
struct SyntaxError : ParseError {
  using ParseError::ParseError;
};
struct UnknownGenerator : Error {
  using Error::Error;
};

/// Always-on internal consistency check; exact arithmetic must never be
/// silently wrong, so these are not compiled out in release builds.
inline void internal_check(bool cond, const char* what) {
  if (!cond) throw Error(std::string("internal check failed: ") + what);
}

}  // namespace lpa
