#pragma once

#include <stdexcept>
#include <string>

namespace rkdisc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Adaptive refinement exhausted its budget before meeting the tolerance.
class NonConvergence : public Error {
public:
  using Error::Error;
};

/// A quadrature node evaluated to NaN or infinity.
class NonFinite : public Error {
public:
  using Error::Error;
};

/// A kernel series could not meet its tail bound within the term cap.
class TruncationError : public Error {
public:
  using Error::Error;
};

/// The two-point Gramian determinant is below the invertibility threshold.
class DegenerateGramian : public Error {
public:
  using Error::Error;
};

/// gamma == 0: the extremal function is identically zero.
class DegenerateExtremal : public Error {
public:
  using Error::Error;
};

/// 1 - <M1,1> came out significantly negative; the Gramian data is unusable.
class NumericalNegativity : public Error {
public:
  using Error::Error;
};

/// A sequence argument violates the required ordering.
class MalformedSequence : public Error {
public:
  using Error::Error;
};

/// A search operation found no witness.
class NotFound : public Error {
public:
  using Error::Error;
};

}  // namespace rkdisc
