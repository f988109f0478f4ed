#pragma once

#include <stdexcept>
#include <string>

namespace wittlab {

// Malformed user input (form literals, prime lists, flag values).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Form-literal parse failure; `position` is the byte offset of the offender.
class FormParseError : public ValidationError {
 public:
  FormParseError(const std::string& what, std::size_t position)
      : ValidationError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Square root requested for a p-adic non-square; carries the failing congruence.
class NotASquareError : public std::domain_error {
 public:
  NotASquareError(const std::string& what, const std::string& witness)
      : std::domain_error(what + " [" + witness + "]"), witness_(witness) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

// A certificate was asked to vouch for more digits than it carries.
class InsufficientPrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A case the library deliberately refuses to guess about.
class UnsupportedCaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bounded search ran out of budget before finding what it was promised.
class SearchBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pipeline step failed; message names the step, its inputs and the witness.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(const std::string& step, const std::string& witness)
      : std::runtime_error("pipeline step '" + step + "' failed: " + witness), step_(step) {}
  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

}  // namespace wittlab
