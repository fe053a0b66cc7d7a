#pragma once

#include <stdexcept>
#include <string>

namespace flagclean {

enum class ErrorKind {
  DimensionMismatch,
  NonInvertible,
  MissingParameter,
  Disconnected,
  WindowTooSmall,
  NonUnitDeterminant,
  Parse,
  Validation,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure reported by the library. The kind is
/// stable and is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace flagclean
