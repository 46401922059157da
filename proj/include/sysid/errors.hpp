#pragma once

#include <stdexcept>
#include <string>

namespace sysid {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent matrix/vector dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameter value or precondition violation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A rollout exceeded the state-norm cutoff. Carries the offending step.
class DivergenceError : public Error {
 public:
  DivergenceError(long step, double norm)
      : Error("state norm " + std::to_string(norm) + " exceeds divergence cutoff at t=" +
              std::to_string(step)),
        step_(step),
        norm_(norm) {}
  long step() const { return step_; }
  double norm() const { return norm_; }

 private:
  long step_;
  double norm_;
};

/// Singular (or numerically singular) regression system. Carries the row index,
/// or -1 when the whole problem is under-determined.
class RankDeficiencyError : public Error {
 public:
  RankDeficiencyError(int row, const std::string& what)
      : Error(what), row_(row) {}
  int row() const { return row_; }

 private:
  int row_;
};

/// Malformed config or data file. Carries a 1-based line number.
class ParseError : public Error {
 public:
  ParseError(long line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace sysid
