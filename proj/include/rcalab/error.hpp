#pragma once

#include <stdexcept>
#include <string>

namespace rcalab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class WidthMismatch : public Error {
 public:
  using Error::Error;
};

class OverlappingWindows : public Error {
 public:
  using Error::Error;
};

class UnsupportedFactor : public Error {
 public:
  using Error::Error;
};

class NotEven : public Error {
 public:
  using Error::Error;
};

class NotInGeneratedGroup : public Error {
 public:
  using Error::Error;
};

class FamilyTooSmall : public Error {
 public:
  using Error::Error;
};

class NotReachable : public Error {
 public:
  NotReachable(std::string stage, const std::string& what)
      : Error("not reachable at stage '" + stage + "': " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

class ConfigInvalid : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& what)
      : Error("parse error at '" + field + "': " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace rcalab
