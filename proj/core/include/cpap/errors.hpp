#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpap {

/// Failure categories. The CLI maps these onto its exit codes.
enum class ErrorKind {
  invalid_input,      // malformed pattern, duplicate entries, bad label
  invalid_class,      // ClassId outside the registry
  domain,             // parameter outside an operation's domain
  cap_exceeded,       // brute-force size cap
  budget,             // memory/term budget exhausted
  non_unit,           // series reciprocal of a non-unit
  singular,           // recurrence step with vanishing leading coefficient
  non_convergence,    // root polishing or extrapolation failed
  no_known_equation,  // no printed ODE / functional equation for this input
  verification,       // a check ran and failed
  io,                 // file or cache problems
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cpap
