#pragma once

#include <stdexcept>
#include <string>

namespace minkpot {

// Base class for every error raised by the library. Callers that only need
// to distinguish "bad input" from "numerical failure" can catch this.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

class DomainError : public Error {
public:
  using Error::Error;
};

class OutOfDomain : public Error {
public:
  using Error::Error;
};

class UnknownClass : public Error {
public:
  using Error::Error;
};

class EmptyClass : public Error {
public:
  using Error::Error;
};

class ParamConstraint : public Error {
public:
  using Error::Error;
};

class ArityMismatch : public Error {
public:
  using Error::Error;
};

class SlotRelationViolation : public Error {
public:
  using Error::Error;
};

class InsufficientPoints : public Error {
public:
  using Error::Error;
};

class DomainTooThin : public Error {
public:
  using Error::Error;
};

class NotMarkedEmpty : public Error {
public:
  using Error::Error;
};

} // namespace minkpot
