#pragma once

#include <stdexcept>
#include <string>

namespace polydyn {

// Precondition / hypothesis failures. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistencies that indicate a bug, not bad input. CLI exit code 1.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define POLYDYN_DEFINE_ERROR(Name)            \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  };

POLYDYN_DEFINE_ERROR(DomainMismatch)
POLYDYN_DEFINE_ERROR(DegreeGuardExceeded)
POLYDYN_DEFINE_ERROR(SizeGuardExceeded)
POLYDYN_DEFINE_ERROR(BothZero)
POLYDYN_DEFINE_ERROR(ConstantInput)
POLYDYN_DEFINE_ERROR(ResultantNotUnit)
POLYDYN_DEFINE_ERROR(NotPrime)
POLYDYN_DEFINE_ERROR(BadReduction)
POLYDYN_DEFINE_ERROR(NonRationalCritical)
POLYDYN_DEFINE_ERROR(ZeroDerivative)
POLYDYN_DEFINE_ERROR(NotQuadratic)
POLYDYN_DEFINE_ERROR(Undecidable)
POLYDYN_DEFINE_ERROR(NotPcf)
POLYDYN_DEFINE_ERROR(PostCriticalT0)
POLYDYN_DEFINE_ERROR(ZeroDiscriminant)
POLYDYN_DEFINE_ERROR(FactorizationIncomplete)
POLYDYN_DEFINE_ERROR(CoefficientsNotInPrimeField)

#undef POLYDYN_DEFINE_ERROR

// Carries the name of the hypothesis that failed, e.g. "t0 mod 4".
class HypothesisFailed : public Error {
 public:
  HypothesisFailed(std::string hypothesis, const std::string& message)
      : Error(message), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

// Parse failure with a byte offset into the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// k does not divide the weighted path count; the path length convention broke.
class NonIntegerCount : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace polydyn
