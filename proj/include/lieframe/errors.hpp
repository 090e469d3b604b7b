#pragma once

#include <stdexcept>
#include <string>

namespace lieframe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LIEFRAME_ERROR(Name)              \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  };

LIEFRAME_ERROR(ConstraintViolation)
LIEFRAME_ERROR(DegreeOverflow)
LIEFRAME_ERROR(DegreeMismatch)
LIEFRAME_ERROR(JacobiViolation)
LIEFRAME_ERROR(DecompositionFailure)
LIEFRAME_ERROR(WrongCausalType)
LIEFRAME_ERROR(NotEtaEinstein)
LIEFRAME_ERROR(Inadmissible)
LIEFRAME_ERROR(EigenFailure)
LIEFRAME_ERROR(RowFailure)
LIEFRAME_ERROR(IncompatibleFactors)
LIEFRAME_ERROR(SingularMetric)
LIEFRAME_ERROR(DegenerateParameters)
LIEFRAME_ERROR(UsageError)

#undef LIEFRAME_ERROR

// Raised by check_contact; carries which condition failed and its residual.
class NotContact : public Error {
 public:
  NotContact(std::string condition, double residual)
      : Error("not an epsilon-contact structure: " + condition +
              " (residual " + std::to_string(residual) + ")"),
        condition_(std::move(condition)),
        residual_(residual) {}
  const std::string& condition() const { return condition_; }
  double residual() const { return residual_; }

 private:
  std::string condition_;
  double residual_;
};

}  // namespace lieframe
