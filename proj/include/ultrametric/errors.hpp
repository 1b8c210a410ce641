#pragma once

#include <stdexcept>
#include <string>

namespace ultrametric {

/// Malformed or invalid input (bad rational syntax, non-prime p, shape mismatch).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (n = 1 for pair regions,
/// a non-root passed to a root-case analysis, c0 = 0 for reciprocals).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ultrametric
