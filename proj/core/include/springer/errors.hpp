#pragma once

#include <stdexcept>
#include <string>

namespace springer {

/// Bad user input: invalid Lie type, rank mismatch, non-dominant weight,
/// zero torus coordinate.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// S(G, lambda) is singular, which for a simple group only happens at lambda = 0.
class NotAlmostFaithfulError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A proven identity or internal invariant failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace springer
