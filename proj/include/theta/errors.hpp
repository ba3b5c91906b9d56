#pragma once

#include <stdexcept>
#include <string>

namespace theta {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands live in different classes mod Z (their difference is not an integer).
struct class_mismatch_error : error {
  using error::error;
};

// An operation restricted to Delta factors received a Zeta or LQ factor.
struct unsupported_form_error : error {
  using error::error;
};

// A stated precondition (e.g. sortedness) does not hold.
struct precondition_error : error {
  using error::error;
};

// A computation needs a tempered attribute (l(tau) or a multiplicity parity)
// that is neither given nor derivable.
struct attributes_required_error : error {
  using error::error;
};

// Level does not match the parity class of the dual pair.
struct level_parity_error : error {
  using error::error;
};

struct invalid_parameter_error : error {
  using error::error;
};

// A value fails a structural invariant of its type.
struct validation_error : error {
  using error::error;
};

struct parse_error : error {
  int line = 0;
  int column = 0;
  parse_error(const std::string& msg, int line_, int col_)
      : error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

}  // namespace theta
