#pragma once

#include <stdexcept>
#include <string>

namespace cospec {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define COSPEC_DEFINE_ERROR(Name)                                \
  struct Name : Error {                                          \
    explicit Name(const std::string& what) : Error(what) {}      \
  }

COSPEC_DEFINE_ERROR(IndexOutOfRange);
COSPEC_DEFINE_ERROR(SelfLoop);
COSPEC_DEFINE_ERROR(DimensionMismatch);
COSPEC_DEFINE_ERROR(AsymmetricLayout);
COSPEC_DEFINE_ERROR(SizeTooSmall);
COSPEC_DEFINE_ERROR(BadParams);
COSPEC_DEFINE_ERROR(UnknownName);
COSPEC_DEFINE_ERROR(NonSymmetric);
COSPEC_DEFINE_ERROR(ConvergenceFailure);
COSPEC_DEFINE_ERROR(NegativeCoupling);
COSPEC_DEFINE_ERROR(EmptyBlock);
COSPEC_DEFINE_ERROR(EmptyStratum);
COSPEC_DEFINE_ERROR(UnnormalizedInput);
COSPEC_DEFINE_ERROR(CapExceeded);
COSPEC_DEFINE_ERROR(BadParticleCount);
COSPEC_DEFINE_ERROR(SingularBlock);
COSPEC_DEFINE_ERROR(NotPositiveDefinite);
COSPEC_DEFINE_ERROR(DegenerateMode);
COSPEC_DEFINE_ERROR(OutOfRange);
COSPEC_DEFINE_ERROR(SizeMismatch);
COSPEC_DEFINE_ERROR(ParseError);

#undef COSPEC_DEFINE_ERROR

}  // namespace cospec
