#pragma once

#include <stdexcept>
#include <string>

namespace lshare {

enum class ErrorKind {
  Domain,         // argument outside the mathematical domain of an operation
  Support,        // evaluation at a point where the quantity is undefined (zero survival, ...)
  Singularity,    // conditional-survival denominator vanished where the integrand is live
  Accuracy,       // quadrature failed to reach the requested tolerance
  Config,         // scenario file failed validation
  Specification,  // theorem instance lacks a required element
  Reproduction,   // counterexample witness not found
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message, std::string diagnostic = {})
      : std::runtime_error(message), kind_(kind), diagnostic_(std::move(diagnostic)) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Stable machine-readable code, e.g. "E_ALPHA_RANGE". Empty unless set.
  const std::string& diagnostic() const noexcept { return diagnostic_; }

private:
  ErrorKind kind_;
  std::string diagnostic_;
};

// Quadrature non-convergence also carries the best estimate reached.
class AccuracyError : public Error {
public:
  AccuracyError(const std::string& message, double estimate, double error_estimate)
      : Error(ErrorKind::Accuracy, message), estimate_(estimate), error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

private:
  double estimate_;
  double error_estimate_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace lshare
