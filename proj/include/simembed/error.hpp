#pragma once

#include <stdexcept>
#include <string>

namespace simembed {

// Base for every error raised by the library. A drawing that merely fails
// certification is not an error; it is reported through CertificateReport.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coordinate magnitude exceeded the kernel budget (see kCoordinateBudget).
class CoordinateBudgetError : public Error {
 public:
  using Error::Error;
};

class DegenerateSegmentError : public Error {
 public:
  using Error::Error;
};

class DuplicatePointError : public Error {
 public:
  using Error::Error;
};

// Input graph does not belong to the declared class or is malformed.
class GraphError : public Error {
 public:
  using Error::Error;
};

class NotAPathError : public GraphError {
 public:
  using GraphError::GraphError;
};

class NotATreeError : public GraphError {
 public:
  using GraphError::GraphError;
};

class NotACaterpillarError : public GraphError {
 public:
  using GraphError::GraphError;
};

// The rotation system does not describe a plane embedding.
class EulerViolationError : public GraphError {
 public:
  using GraphError::GraphError;
};

class NotTriangulatedError : public GraphError {
 public:
  using GraphError::GraphError;
};

class CrossingChordsError : public GraphError {
 public:
  using GraphError::GraphError;
};

class MissingCycleEdgeError : public GraphError {
 public:
  using GraphError::GraphError;
};

// Inputs to an embedder disagree (vertex sets, cardinalities, general position).
class InputMismatchError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// A proven-impossible state was reached: a bug, never a user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace simembed
