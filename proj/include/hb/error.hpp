#pragma once

#include <stdexcept>
#include <string>

namespace hb {

// Errors signal misuse or unsatisfiable requests.  Axiom *failures* are
// data (see report.hpp), never exceptions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Composition/tensor/equality called on morphisms whose objects do not match.
struct DomainMismatch : Error {
  using Error::Error;
};

// GradedFlip requested for an object of dim > 1 without an explicit grading.
struct MissingGrading : Error {
  using Error::Error;
};

// A linear system has no (unique) exact solution; carries the pivot count.
struct NotInvertible : Error {
  int rank;
  int size;
  NotInvertible(const std::string& msg, int rank_ = -1, int size_ = -1)
      : Error(msg), rank(rank_), size(size_) {}
};

// Antipode inversion failed where an invertible antipode is required.
struct AntipodeNotInvertible : NotInvertible {
  using NotInvertible::NotInvertible;
};

// A solved result failed its independent verification; indicates a bug.
struct InternalInconsistency : Error {
  using Error::Error;
};

// Structurally malformed input (bad shapes, failed functor gates, ...).
struct InvalidInput : Error {
  using Error::Error;
};

// Functor Q applied to a post-Hopf algebra that fails the (*) condition.
struct StarConditionFailed : InvalidInput {
  using InvalidInput::InvalidInput;
};

// Skew-brace constructor given tables that fail the element-wise checks.
struct InvalidSkewBrace : InvalidInput {
  using InvalidInput::InvalidInput;
};

// Enumeration requested beyond the configured order bound.
struct BoundExceeded : Error {
  using Error::Error;
};

// beta was requested but the convolution system for alpha is not solvable.
struct BetaUnavailable : Error {
  using Error::Error;
};

// File/serialization problems.
struct IOError : Error {
  using Error::Error;
};

// Expression language: lexical/grammatical error at a source position.
struct SyntaxError : Error {
  int line, col;
  SyntaxError(const std::string& msg, int line_, int col_)
      : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_), col(col_) {}
};

// Expression language: identifier not bound for the current structure.
struct UnknownGenerator : Error {
  using Error::Error;
};

// Expression language: well-formed expression whose objects do not compose.
struct TypeMismatch : Error {
  using Error::Error;
};

}  // namespace hb
