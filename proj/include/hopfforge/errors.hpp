#pragma once

#include <stdexcept>
#include <string>

namespace hopfforge {

/// Base of every error thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A named hypothesis of a construction does not hold for the given input.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string name, const std::string& message)
      : Error(name + ": " + message), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// The cyclotomic conductor lacks a root of unity some construction needs.
class ConductorError : public PreconditionError {
 public:
  ConductorError(unsigned conductor, unsigned missing_order)
      : PreconditionError("conductor",
                          "conductor " + std::to_string(conductor) +
                              " has no primitive root of unity of order " +
                              std::to_string(missing_order)),
        missing_order_(missing_order) {}
  unsigned missing_order() const noexcept { return missing_order_; }

 private:
  unsigned missing_order_;
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in cyclotomic field") {}
};

/// A proven identity failed: this is a bug in a construction, not bad input.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class NotHopfSubalgebra : public Error {
 public:
  using Error::Error;
};

class FieldNotSplitting : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedRoute : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace hopfforge
