#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncontact {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

#define NCONTACT_DEFINE_ERROR(Name) \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  }

NCONTACT_DEFINE_ERROR(UnknownVariable);
NCONTACT_DEFINE_ERROR(InvalidCurvePoly);
NCONTACT_DEFINE_ERROR(BothConstantInY);
NCONTACT_DEFINE_ERROR(DimensionMismatch);
NCONTACT_DEFINE_ERROR(SingularCurve);
NCONTACT_DEFINE_ERROR(CurveMismatch);
NCONTACT_DEFINE_ERROR(PointNotOnCurve);
NCONTACT_DEFINE_ERROR(InfinityPoint);
NCONTACT_DEFINE_ERROR(EqualPoints);
NCONTACT_DEFINE_ERROR(DegenerateSystem);
NCONTACT_DEFINE_ERROR(InvalidRepresentation);
NCONTACT_DEFINE_ERROR(ShapeError);
NCONTACT_DEFINE_ERROR(WrongOrder);
NCONTACT_DEFINE_ERROR(DegreeMismatch);
NCONTACT_DEFINE_ERROR(DegreeTooSmall);
NCONTACT_DEFINE_ERROR(NotHomogeneous);
NCONTACT_DEFINE_ERROR(ZeroParameters);
NCONTACT_DEFINE_ERROR(UnknownName);
NCONTACT_DEFINE_ERROR(UnknownSection);
NCONTACT_DEFINE_ERROR(InvalidArgument);

#undef NCONTACT_DEFINE_ERROR

/// Raised when an exact division leaves a remainder. The remainder is kept in
/// printed canonical form so the error stays independent of polynomial types.
class NotDivisible : public Error {
 public:
  NotDivisible(const std::string& what, std::string remainder)
      : Error(what + " (remainder " + remainder + ")"), remainder_(std::move(remainder)) {}
  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::string remainder_;
};

}  // namespace ncontact
