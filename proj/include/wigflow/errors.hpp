#pragma once

#include <stdexcept>
#include <string>

namespace wigflow {

/// Base of every error raised by the library. Callers that do not care about
/// the category can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WIGFLOW_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  };

WIGFLOW_DEFINE_ERROR(InvalidGridError)
WIGFLOW_DEFINE_ERROR(ShapeError)
WIGFLOW_DEFINE_ERROR(TailMassError)
WIGFLOW_DEFINE_ERROR(NormalizationError)
WIGFLOW_DEFINE_ERROR(WeightError)
WIGFLOW_DEFINE_ERROR(SymplecticError)
WIGFLOW_DEFINE_ERROR(DomainError)
WIGFLOW_DEFINE_ERROR(MonotoneCaseError)
WIGFLOW_DEFINE_ERROR(InputError)
WIGFLOW_DEFINE_ERROR(NumericalError)

#undef WIGFLOW_DEFINE_ERROR

}  // namespace wigflow
