#pragma once

#include <stdexcept>
#include <string>

namespace robustnet {

// Defective input text or file. Carries the 1-based line number when known
// (0 when the problem is not tied to a line, e.g. an unreadable file).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line_no)
      : std::runtime_error(line_no > 0 ? what + " (line " + std::to_string(line_no) + ")"
                                       : what),
        line(line_no) {}
  int line;
};

// Vertex index outside [0, n).
class RangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Edge of the form (i, i).
class SelfLoopError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Instance too large for the configured exact strategy.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical routine failed to meet its contract (e.g. no convergence).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested measure has no defined value on this input
// (e.g. betweenness averages on a disconnected graph).
class UndefinedMeasureError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Resistance queried between vertices in different components.
class InfiniteResistanceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace robustnet
