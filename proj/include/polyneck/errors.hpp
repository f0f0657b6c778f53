#pragma once

#include <stdexcept>
#include <string>

namespace polyneck {

/// Argument outside the documented domain of an operation (bad m, L <= 0, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a mathematical precondition (e.g. a radial vector where a
/// tangent one is required, or hypotheses of the decay lemma not met).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation point outside the domain of a formula (x = 0 on the sphere).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// No certified gap length was found below the search cap.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The admissible-instance generator could not satisfy its constraints.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polyneck
