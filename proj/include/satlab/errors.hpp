#pragma once
#include <stdexcept>
#include <string>

namespace satlab {

// Base for everything thrown on purpose. The CLI catches this at the top
// level and maps it to an exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter outside the documented domain (bad r, t, keep count, ...).
struct ParameterError : Error {
  using Error::Error;
};

// Instance larger than a configured ceiling. Raise the ceiling through
// Limits / SATLAB_LIMITS if you really mean it.
struct LimitExceeded : Error {
  using Error::Error;
};

// Negative multiplicity or a multiplicity vector of the wrong length.
struct InvalidMultiplicity : ParameterError {
  using ParameterError::ParameterError;
};

// No construction exists for the requested parameter regime.
struct Infeasible : Error {
  using Error::Error;
};

// The degree-threshold cover failed its validity check.
struct NotACover : Error {
  using Error::Error;
};

// A table lookup for a quantity nobody has determined yet.
struct UnknownValue : Error {
  using Error::Error;
};

// Malformed JSON or other external input.
struct ParseError : Error {
  using Error::Error;
};

} // namespace satlab
