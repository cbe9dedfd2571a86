#pragma once

#include <stdexcept>
#include <string>

namespace contlog {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain argument (x outside [0,1], m < 3, bad syntax).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidDigit : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NonPositiveArgument : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class EmptyRatioList : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class RatioOutOfRange : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class InvalidProbabilityVector : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class InvalidGrid : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Certification failed even at the precision cap.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured word or cell budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace contlog
