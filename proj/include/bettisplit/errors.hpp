#ifndef BETTISPLIT_ERRORS_HPP
#define BETTISPLIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace bettisplit {

/// Base class of every recoverable error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Unparseable text, inconsistent vector lengths, out-of-range indices.
class MalformedInput : public Error {
public:
  using Error::Error;
};

/// Exponent arithmetic left the range of the exponent type.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Two operands live in polynomial rings with different variable counts.
class AmbientMismatch : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A split in which one side would have no generators.
class DegenerateSplit : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// Linear-resolution questions need generators of a single degree.
class NotEquigenerated : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// A simplicial complex that cannot be dualized (a facet is the whole vertex set).
class DegenerateComplex : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// Parameters outside the range where a splitting theorem applies.
class HypothesisError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// The explicit splitting construction produced a generator of one summand
/// that is not a minimal generator of the whole ideal.
class ConstructionFailure : public HypothesisError {
public:
  ConstructionFailure(const std::string& what, std::vector<std::string> offending)
      : HypothesisError(what), offending_(std::move(offending)) {}

  const std::vector<std::string>& offending_generators() const { return offending_; }

private:
  std::vector<std::string> offending_;
};

/// A quantity that has no value for the given input (e.g. regularity of the zero ideal).
class UndefinedError : public Error {
public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// A computed result contradicts a theorem the library relies on. This means
/// an engine bug, never bad user input.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace bettisplit

#endif
