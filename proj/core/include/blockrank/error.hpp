#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockrank {

enum class ErrorCode {
  DuplicateArc,
  ZeroWeight,
  VertexOutOfRange,
  DimensionMismatch,
  IndexOutOfRange,
  InvalidSplit,
  PreconditionViolated,
  InconsistentClassification,
  NotAForest,
  InvalidSpec,
  ParseError,
  UnknownSuite,
  InternalMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (notably the CLI) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace blockrank
