#pragma once

#include <stdexcept>
#include <string>

namespace orbitrace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a documented precondition or schema.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class OracleMismatch : public Error {
 public:
  using Error::Error;
};

/// A word lies outside the sublanguage on which the oracle decides equality.
class UnrecognizedWord : public Error {
 public:
  using Error::Error;
};

class NotACycle : public Error {
 public:
  using Error::Error;
};

class NotInverse : public Error {
 public:
  using Error::Error;
};

class NotCentral : public Error {
 public:
  using Error::Error;
};

class NotAContraction : public Error {
 public:
  using Error::Error;
};

/// A Hochschild term whose centralizer value cannot be extracted.
class IrreducibleTerm : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class FixedPointPresent : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed; indicates a bug, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitrace

namespace orbitrace {

/// Input document does not match the expected JSON schema.
class SchemaError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

}  // namespace orbitrace
