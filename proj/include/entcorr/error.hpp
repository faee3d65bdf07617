#pragma once

#include <stdexcept>

namespace entcorr {

/// Input outside an operation's mathematical domain (bad dimension, non-Hermitian
/// matrix, argument out of range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A construction needs more room than the Hilbert space offers.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Post-construction self-check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace entcorr
