#pragma once

#include <stdexcept>
#include <string>

namespace kproj {

/// Process exit codes used by the command-line tool.
enum class ExitCode : int {
  ok = 0,
  math_failure = 2,
  parse_error = 3,
  limit_exceeded = 4,
  missing_metadata = 5,
};

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message, ExitCode code)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)), code_(code) {}

  const std::string& kind() const noexcept { return kind_; }
  ExitCode exit_code() const noexcept { return code_; }

 private:
  std::string kind_;
  ExitCode code_;
};

#define KPROJ_DEFINE_ERROR(Name, Code)                                          \
  class Name : public Error {                                                   \
   public:                                                                      \
    explicit Name(const std::string& message) : Error(#Name, message, Code) {} \
  };

KPROJ_DEFINE_ERROR(ShapeMismatch, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(AxiomViolation, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(SingularMatrix, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(NotZeroOne, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(DimensionMismatch, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(QNotInvertible, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(QBarNotProjector, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(NotABasis, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(NotIdempotent, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(BlockNotIdempotent, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(BNotInvertible, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(RelationViolation, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(DiagramViolation, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(ZeroActionFails, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(IdempotencyFailure, ExitCode::math_failure)
KPROJ_DEFINE_ERROR(ParseError, ExitCode::parse_error)
KPROJ_DEFINE_ERROR(DimensionOverflow, ExitCode::limit_exceeded)
KPROJ_DEFINE_ERROR(LimitExceeded, ExitCode::limit_exceeded)
KPROJ_DEFINE_ERROR(MissingMetadata, ExitCode::missing_metadata)
KPROJ_DEFINE_ERROR(ModeUnavailable, ExitCode::missing_metadata)

#undef KPROJ_DEFINE_ERROR

}  // namespace kproj
