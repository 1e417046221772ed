#pragma once

#include <stdexcept>
#include <string>

namespace qalt {

// Base of every error raised by the library. The CLI maps the subclasses
// onto exit codes (input errors -> 2, resource errors -> 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text that does not match an input grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid planar diagram (arc multiplicity, bad arc ids).
class MalformedDiagram : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input violates the hypotheses of a closed-form result.
class HypothesisViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A configured size bound (crossings, states) would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qalt
