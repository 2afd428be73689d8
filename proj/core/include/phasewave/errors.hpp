#pragma once

#include <stdexcept>
#include <string>

namespace phasewave {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (non-finite input,
// polynomial degree above the supported cap, non-periodic profile, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Inconsistent configuration: CFL violation, grid mismatch, bad quadrature
// sizes, potential degree too large.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A quadrature error estimate stayed above the requested tolerance after one
// refinement.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double estimate, double tolerance)
      : Error(what), estimate_(estimate), tolerance_(tolerance) {}

  double estimate() const noexcept { return estimate_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  double estimate_;
  double tolerance_;
};

// C + <f> + <g> vanishes, so the profile cannot be normalized.
class DegenerateProfileError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NumericalBlowupError : public Error {
 public:
  using Error::Error;
};

// Non-finite sample or malformed input file.
class DataError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  IoError(const std::string& what, std::string path)
      : Error(what + ": " + path), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace phasewave
