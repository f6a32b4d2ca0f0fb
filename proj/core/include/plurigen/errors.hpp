#pragma once

#include <stdexcept>
#include <string>

namespace plurigen {

// Malformed textual input (rationals, baskets, weights, table files).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical data whose Riemann-Roch values are not non-negative integers.
class InconsistentDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an operation's arguments was violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace plurigen
