#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dircyc {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial expression. `position` is a 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An expanded expression exceeded the configured maximum degree.
class DegreeOverflowError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Argument outside the mathematical domain of an operation
/// (non-unimodular rotation, alpha <= 2 for the certificate, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Factorization or self-check failure inside a numerical kernel.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// The root finder did not reach its residual target. Carries the last iterates.
class ConvergenceFailure : public NumericalFailure {
 public:
  ConvergenceFailure(const std::string& message, std::vector<std::complex<double>> iterates)
      : NumericalFailure(message), iterates_(std::move(iterates)) {}
  const std::vector<std::complex<double>>& iterates() const noexcept { return iterates_; }

 private:
  std::vector<std::complex<double>> iterates_;
};

/// A decision sat too close to its threshold to be trusted.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

}  // namespace dircyc
