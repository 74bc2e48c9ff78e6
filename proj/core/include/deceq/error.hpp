#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deceq {

enum class ErrorKind {
  UnknownSymbol,
  SourceTargetMismatch,
  IllFormedPair,
  SourceMismatch,
  CarrierMismatch,
  MissingInterpretation,
  UnknownBaseType,
  DuplicateLocation,
  WrongFlavor,
  NameClash,
  NotDualizable,
  SyntaxError,
  UndeclaredLocation,
  UndeclaredException,
  TypeMismatch,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception; `kind` lets
// callers (and tests) tell the error cases apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace deceq
