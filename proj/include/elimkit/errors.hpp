#pragma once

#include <stdexcept>
#include <string>

namespace elimkit {

// Every failure carries a stable kind tag so the CLI can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define ELIMKIT_ERROR(Name)                                              \
  struct Name : Error {                                                  \
    explicit Name(const std::string& msg = #Name) : Error(#Name, msg) {} \
  };

ELIMKIT_ERROR(NotDivisible)
ELIMKIT_ERROR(DivisionByZero)
ELIMKIT_ERROR(WrongRing)
ELIMKIT_ERROR(UnsupportedRing)
ELIMKIT_ERROR(RingMismatch)
ELIMKIT_ERROR(SignatureMismatch)
ELIMKIT_ERROR(NonHomogeneous)
ELIMKIT_ERROR(PerturbationDegenerate)
ELIMKIT_ERROR(DegreeTooLow)
ELIMKIT_ERROR(NotQuadratic)
ELIMKIT_ERROR(DeltaIsOne)
ELIMKIT_ERROR(NotGeneric)
ELIMKIT_ERROR(DegenerateSignature)
ELIMKIT_ERROR(TooLarge)
ELIMKIT_ERROR(UnweightedSymbol)
ELIMKIT_ERROR(ParseError)
ELIMKIT_ERROR(UnknownSuite)

#undef ELIMKIT_ERROR

}  // namespace elimkit
