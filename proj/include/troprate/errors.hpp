#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace troprate {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-conforming shapes (matrix product, non-square trace, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (inverse of zero, zero to a
/// non-positive power, non-regular vector where a regular one is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Enumeration or grid size exceeds the configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

enum class Infeasibility {
  /// Tr(A) > 1: the Kleene star is undefined and Ax + c <= x has no regular
  /// solution.
  TraceExceedsOne,
  /// d^- A* c > 1: the double inequality Ax + c <= x <= d has no solution.
  EmptyBox,
};

constexpr std::string_view to_string(Infeasibility kind) {
  switch (kind) {
    case Infeasibility::TraceExceedsOne:
      return "trace-exceeds-one";
    case Infeasibility::EmptyBox:
      return "empty-box";
  }
  return "unknown";
}

class InfeasibleError : public Error {
 public:
  InfeasibleError(Infeasibility kind, const std::string& what)
      : Error(what), kind_(kind) {}

  Infeasibility kind() const noexcept { return kind_; }

 private:
  Infeasibility kind_;
};

}  // namespace troprate
