#pragma once

#include <stdexcept>
#include <string>

namespace projline {

enum class Errc {
  ZeroPolynomial,
  EndpointIsRoot,
  DivisionByZero,
  ContextMismatch,
  ZeroConstantTerm,
  RootAtOne,
  InternalLimit,
  InvalidArgument,
  IdentityInput,
  NonDistinctPoints,
  UndefinedDerivative,
  ContinuityViolation,
  OrientationViolation,
  InjectivityViolation,
  NonPartition,
  PointNotFixed,
  DoesNotFixInfinity,
  LambdaNotGreaterThanOne,
  WitnessFailure,
  UnknownGenerator,
  EllipticInput,
  NegativeTraceUnresolvable,
  NotInFlow,
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace projline
