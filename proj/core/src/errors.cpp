#include "cpap/errors.hpp"

namespace cpap {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::invalid_class: return "invalid-class";
    case ErrorKind::domain: return "domain";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::budget: return "budget";
    case ErrorKind::non_unit: return "non-unit";
    case ErrorKind::singular: return "singular-recurrence";
    case ErrorKind::non_convergence: return "non-convergence";
    case ErrorKind::no_known_equation: return "no-known-equation";
    case ErrorKind::verification: return "verification";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace cpap
