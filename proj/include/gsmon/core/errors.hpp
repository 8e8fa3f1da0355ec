#pragma once

#include <stdexcept>
#include <string>

namespace gsmon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GSMON_DEFINE_ERROR(Name)                  \
  class Name : public Error {                     \
   public:                                        \
    explicit Name(const std::string& what)        \
        : Error(std::string(#Name ": ") + what) {} \
  }

GSMON_DEFINE_ERROR(MalformedPresentation);
GSMON_DEFINE_ERROR(MissingPreorder);
GSMON_DEFINE_ERROR(MissingObject);
GSMON_DEFINE_ERROR(MissingStructure);
GSMON_DEFINE_ERROR(Infeasible);
GSMON_DEFINE_ERROR(DimensionMismatch);
GSMON_DEFINE_ERROR(RowSumViolation);
GSMON_DEFINE_ERROR(NotMonotone);
GSMON_DEFINE_ERROR(NotPreorder);
GSMON_DEFINE_ERROR(InterfaceMismatch);
GSMON_DEFINE_ERROR(SortMismatch);
GSMON_DEFINE_ERROR(TypeMismatch);
GSMON_DEFINE_ERROR(NotGsMonoidalMonad);
GSMON_DEFINE_ERROR(ArithmeticOverflow);
GSMON_DEFINE_ERROR(FixtureError);

#undef GSMON_DEFINE_ERROR

}  // namespace gsmon
