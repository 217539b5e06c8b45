#pragma once

#include <stdexcept>
#include <string>

namespace rosette {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define ROSETTE_ERROR(Name)                                                    \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
  }

ROSETTE_ERROR(NoConvergence);
ROSETTE_ERROR(DomainError);
ROSETTE_ERROR(SingularPoint);
ROSETTE_ERROR(SingularParameter);
ROSETTE_ERROR(NonCanonicalBeta);
ROSETTE_ERROR(IntervalCrossesCusp);
ROSETTE_ERROR(WrongBeta);
ROSETTE_ERROR(TooCloseToCurve);
ROSETTE_ERROR(OpenCurve);
ROSETTE_ERROR(QuadratureFailure);
ROSETTE_ERROR(ParseError);
ROSETTE_ERROR(IoError);

#undef ROSETTE_ERROR

} // namespace rosette
