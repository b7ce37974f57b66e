#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A basis label was looked up in an algebra that does not contain it.
struct UnknownLabelError : Error {
  using Error::Error;
};

/// A generator tag does not belong to the acting algebra.
struct UnknownGeneratorError : Error {
  using Error::Error;
};

/// A dimension argument is outside the constructible range.
struct BadDimensionError : Error {
  using Error::Error;
};

/// The subspace passed to quotient() is not a two-sided ideal.
struct NotAnIdealError : Error {
  using Error::Error;
};

/// A matrix that must be invertible is singular.
struct SingularMatrixError : Error {
  using Error::Error;
};

/// instantiate() was called without a value for some free parameter.
struct MissingParameterError : Error {
  using Error::Error;
};

/// A finitely tabulated map was queried outside its table.
struct MissingEntryError : Error {
  using Error::Error;
};

/// A basis change violates the admissibility restrictions of its family.
struct InadmissibleChangeError : Error {
  using Error::Error;
};

/// A template product would multiply two unknown-bearing coefficients.
struct NonlinearTemplateError : Error {
  using Error::Error;
};

/// A linear system has no solution (some row forces 0 = c, c != 0).
struct InconsistentError : Error {
  using Error::Error;
};

/// Family parameters break a required symmetry relation.
struct SymmetryViolationError : Error {
  using Error::Error;
};

/// Malformed serialized input (JSON or label syntax).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace leibniz
