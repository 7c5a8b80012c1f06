#pragma once

#include <stdexcept>

namespace ulrichk3 {

// Contract violation on operation inputs: a < 2, r < 1, odd c1^2, malformed
// Gram matrix, bad scan ranges.  The CLI maps these to usage exit code 2.
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// reflect() requires a (-2)-class.
struct root_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Enumeration was asked for a slice whose restricted form is not negative
// definite (signature != (1,2,0) or polarization square <= 0): the witness
// box would be unbounded and no exhaustiveness certificate exists.
struct ill_posed_query : std::domain_error {
  using std::domain_error::domain_error;
};

// The nef walk exceeded its iteration cap without stabilizing.
struct iteration_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ulrichk3
