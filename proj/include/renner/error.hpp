#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace renner {

  enum class ErrorCode {
    UnsupportedType,
    IndexOutOfRange,
    GroupTooLarge,
    ZeroWeight,
    LatticeInconsistent,
    NotAFacePair,
    BadJ,
    NotInWe,
    FaceNotInOrbit,
    WrongClass,
    NotProjective,
    ClosureViolation,
    PropertyViolation,
    DimensionMismatch,
    NotIntegerValued,
    UnsupportedComponent,
    MismatchWitness,
    BadElement,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  //! Every failure raised by the library carries one of the codes above so
  //! that the CLI can map it onto an exit status.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace renner
