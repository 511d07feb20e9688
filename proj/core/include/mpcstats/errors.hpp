#pragma once

#include <stdexcept>
#include <string>

namespace mpcstats {

// Base of every error raised by the engine. Callers that only need to know
// "the run failed" catch this; the CLI maps it to a nonzero exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class InsufficientSharesError : public Error {
 public:
  using Error::Error;
};

// Shares that do not lie on a single polynomial of the declared degree.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class SchedulingError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mpcstats
