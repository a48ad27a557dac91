#pragma once

#include <stdexcept>
#include <string>

namespace fpp {

/// Base of every error raised by the library. The CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FPP_DEFINE_ERROR(Name)           \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

FPP_DEFINE_ERROR(NotRational);
FPP_DEFINE_ERROR(DivisionByZero);
FPP_DEFINE_ERROR(NotReal);
FPP_DEFINE_ERROR(NotInvertible);
FPP_DEFINE_ERROR(NotIotaInvariant);
FPP_DEFINE_ERROR(NotHermitian);
FPP_DEFINE_ERROR(NotInImage);
FPP_DEFINE_ERROR(ZeroVector);
FPP_DEFINE_ERROR(BasisNotIntegral);
FPP_DEFINE_ERROR(EigenvalueOne);
FPP_DEFINE_ERROR(NotAnInteger);
FPP_DEFINE_ERROR(NotPrimitive);
FPP_DEFINE_ERROR(ParityMismatch);
FPP_DEFINE_ERROR(SingularMatrix);
FPP_DEFINE_ERROR(Ambiguous);
FPP_DEFINE_ERROR(Unsupported);
FPP_DEFINE_ERROR(ConfigError);

#undef FPP_DEFINE_ERROR

}  // namespace fpp
