#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace radonlike {

enum class ErrorKind {
  InvalidArgument,
  Schema,
  NoPrincipalPart,
  HomogeneityViolation,
  VanishingPrincipalPart,
  WeightOrderViolation,
  DegenerateDenominator,
  DegenerateSpace,
  DilationCap,
  Resolution,
  Range,
  SingularMap,
  NonConvergence,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it to an exit code.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace radonlike
