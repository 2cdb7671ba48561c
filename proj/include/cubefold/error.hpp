#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubefold {

enum class ErrorKind {
  DuplicateVertex,
  UnknownEndpoint,
  SelfLoop,
  Disconnected,
  UnknownVertex,
  UnknownHyperplane,
  NotWellDefined,
  HalfspacesUnavailable,
  NotMedian,
  DisconnectedSubset,
  NotInContact,
  NotTangent,
  NotFactorizable,
  MissingFourthCorner,
  EdgeCollapsed,
  NotAnEdge,
  ParallelBroken,
  DomainMismatch,
  ImagesDiffer,
  NotEquivariant,
  NotAutomorphism,
  GroupTooLarge,
  ParseError,
  InternalError,
};

std::string_view error_name(ErrorKind kind);

/// Domain error raised by every module. `what()` carries the detail message;
/// the CLI prints `<name>: <message>`.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace cubefold
