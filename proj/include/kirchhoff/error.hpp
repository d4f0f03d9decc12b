#pragma once

#include <stdexcept>
#include <string>

namespace kirchhoff {

enum class ErrorKind {
  Parse,
  DuplicateLabel,
  UnknownLabel,
  NonPositiveResistance,
  SelfLoop,
  NonIntegerMatrix,
  ConvergenceFailure,
  SingularShift,
  Disconnected,
  SameVertex,
  NotATree,
  SingularA,
  NotSymmetricBlocks,
  NotYangYuForm,
  InvalidParameter,
  ShapeMismatch,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kirchhoff
