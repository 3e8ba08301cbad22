#pragma once

#include <stdexcept>
#include <string>

namespace rca {

/// Input outside the mathematical domain of an operation (non-coprime (r,a), a >= r, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search bound was too small to certify the answer.
class BoundExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A self-check failed; indicates a bug or inconsistent input data.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No certified deformed label was found for an arrow.
class LiftSearchExhausted : public BoundExhausted {
 public:
  using BoundExhausted::BoundExhausted;
};

}  // namespace rca
