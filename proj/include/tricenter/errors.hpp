#pragma once

#include <stdexcept>
#include <string>

namespace tricenter {

enum class ErrorKind {
  DegenerateTriangle,
  DegenerateTrilinears,
  NotInterior,
  TooCloseToBoundary,
  ToleranceNotReached,
  NegativeRadicand,
  BracketFailure,
  NoConvergence,
  InvalidArgument,
};

/// Stable snake_case identifier, used in machine-readable CLI errors.
const char* to_string(ErrorKind kind);

/// Base of every failure raised by the library. Callers that only care about
/// the category can switch on kind(); the subclasses exist so that tests and
/// call sites can catch one failure mode specifically.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define TRICENTER_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(ErrorKind::Name, what) {} \
  };

TRICENTER_DEFINE_ERROR(DegenerateTriangle)
TRICENTER_DEFINE_ERROR(DegenerateTrilinears)
TRICENTER_DEFINE_ERROR(NotInterior)
TRICENTER_DEFINE_ERROR(TooCloseToBoundary)
TRICENTER_DEFINE_ERROR(NegativeRadicand)
TRICENTER_DEFINE_ERROR(BracketFailure)
TRICENTER_DEFINE_ERROR(InvalidArgument)

#undef TRICENTER_DEFINE_ERROR

class ToleranceNotReached : public Error {
 public:
  ToleranceNotReached(const std::string& what, double achieved)
      : Error(ErrorKind::ToleranceNotReached, what), achieved_(achieved) {}
  /// Error estimate at the point the subdivision budget ran out.
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace tricenter
