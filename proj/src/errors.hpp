#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace rim {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  singular_shift,
  parse,
  io,
  solver,
  max_depth,
  mesh,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/* z B - A was numerically singular: a pivot fell below the n*ulp*norm
 * threshold, i.e. the shift sits on (or almost on) an eigenvalue. */
class SingularShiftError : public Error {
 public:
  SingularShiftError(std::complex<double> shift, const std::string& message)
      : Error(ErrorCode::singular_shift, message), shift_(shift) {}

  std::complex<double> shift() const { return shift_; }

 private:
  std::complex<double> shift_;
};

}  // namespace rim
