#pragma once

#include <stdexcept>
#include <string>

namespace slicecert {

// Base class for all structured errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Vector length does not match the rank of the form it is paired against.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Input data fails a validity check (Seifert matrix, form, CSV row, ...).
struct InvalidInput : Error {
  using Error::Error;
};

// A rule was invoked without its prerequisite assumptions.
struct PrerequisiteError : Error {
  explicit PrerequisiteError(const std::string& assumption, const std::string& detail)
      : Error("prerequisite " + assumption + " failed: " + detail), assumption(assumption) {}
  std::string assumption;
};

// A claimed parameter cancellation or table identity failed to re-verify.
// Indicates a bug in the engine, not bad input.
struct InternalInconsistency : Error {
  using Error::Error;
};

}  // namespace slicecert
