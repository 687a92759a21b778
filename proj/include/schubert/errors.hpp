#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Malformed or out-of-range user input (bad Cartan type, letter out of
/// range, non-dominant weight, ...). Raised before any computation starts.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The classifier was asked about a pair (w, I) with I not contained in the
/// left descent set of w. No verdict exists for such a pair.
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A weight polynomial handed to the Levi decomposition is not the character
/// of an L_I-module.
class NotLeviCharacter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An identity that must hold for every input failed. Always a bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured size cap (group order, character size, search budget) would
/// be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace schubert
