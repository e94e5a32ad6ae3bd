#ifndef QUADMAT_ERRORS_HPP
#define QUADMAT_ERRORS_HPP

#include <stdexcept>

namespace quadmat {

// Zero or otherwise meaningless input: D = 0, D not square-free, parity
// violation, decomposition of 0, exponent of 0.
struct degenerate_input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mixing elements of distinct quadratic fields in one operation.
struct field_mismatch_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A matrix outside the domain of the requested operation, e.g. a
// commutant basis request for a matrix with a zero off-diagonal entry.
struct unsupported_matrix_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A divisibility or integrality condition required by a lift is not met.
struct lift_condition_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Parameters handed to a solution-family generator violate the family's
// side conditions (wrong field, wrong exponent residue, excluded values).
struct family_condition_error : std::domain_error {
  using std::domain_error::domain_error;
};

// An identity that is supposed to hold by construction failed to verify,
// or a caller handed in data that fails a documented precondition that we
// re-check (e.g. an unverified solution triple).
struct contract_violation_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace quadmat

#endif
