#pragma once

#include <stdexcept>
#include <string>

namespace bellforge {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured feasibility guard.
/// The message names the guard and suggests the heuristic/oracle path.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A packaged data file is missing or fails its checksum.
class DataIntegrityError : public Error {
 public:
  using Error::Error;
};

/// A file exists but its content does not match the expected format.
/// Messages carry line/field diagnostics where available.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure (open/read/write).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bellforge
