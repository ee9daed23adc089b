#pragma once

#include <stdexcept>
#include <string>

namespace orbitvol {

/// Base for every error raised by the library. The CLI maps these to exit
/// code 2 with a machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct UnsupportedTypeError : Error {
  explicit UnsupportedTypeError(const std::string& m) : Error("UnsupportedType", m) {}
};

struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& m) : Error("DimensionMismatch", m) {}
};

struct OrderCapExceededError : Error {
  explicit OrderCapExceededError(const std::string& m) : Error("OrderCapExceeded", m) {}
};

struct RankDeficientError : Error {
  explicit RankDeficientError(const std::string& m) : Error("RankDeficient", m) {}
};

struct UnboundedError : Error {
  explicit UnboundedError(const std::string& m) : Error("Unbounded", m) {}
};

struct ConstraintCapError : Error {
  explicit ConstraintCapError(const std::string& m) : Error("ConstraintCapExceeded", m) {}
};

struct TermCapExceededError : Error {
  explicit TermCapExceededError(const std::string& m) : Error("TermCapExceeded", m) {}
};

struct DivisibilityViolationError : Error {
  explicit DivisibilityViolationError(const std::string& m) : Error("DivisibilityViolation", m) {}
};

struct RegularityViolationError : Error {
  explicit RegularityViolationError(const std::string& m) : Error("RegularityViolation", m) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& m) : Error("Validation", m) {}
};

}  // namespace orbitvol
