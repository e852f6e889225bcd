#pragma once

#include <stdexcept>
#include <string>

namespace vtc {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define VTC_DEFINE_ERROR(Name)            \
  class Name : public error {             \
   public:                                \
    using error::error;                   \
  }

// exact
VTC_DEFINE_ERROR(DivisionByZero);
VTC_DEFINE_ERROR(DegenerateSubstitution);
VTC_DEFINE_ERROR(ParseError);

// dirlim
VTC_DEFINE_ERROR(InvalidSystem);
VTC_DEFINE_ERROR(IncompatibleTarget);
VTC_DEFINE_ERROR(UnknownElement);
VTC_DEFINE_ERROR(NotASubspace);

// catdata / fusion / induction
VTC_DEFINE_ERROR(InvalidLabel);
VTC_DEFINE_ERROR(ForeignLabel);
VTC_DEFINE_ERROR(CategoryMismatch);
VTC_DEFINE_ERROR(NotLocal);
VTC_DEFINE_ERROR(TruncationTooSmall);
VTC_DEFINE_ERROR(InfiniteSupport);

#undef VTC_DEFINE_ERROR

}  // namespace vtc
