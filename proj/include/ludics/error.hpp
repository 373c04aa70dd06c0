#pragma once

#include <stdexcept>
#include <string>

namespace ludics {

enum class ErrorKind {
  MalformedDesign,
  PolarityMismatch,
  NotClosed,
  ArityMismatch,
  NotCompatible,
  NotAPath,
  InvalidConnective,
  InvalidWorkbench,
  SyntaxError,
  UnknownName,
  ArityError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ludics
