#pragma once

#include <stdexcept>
#include <string>

namespace diocurve {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed "p/q" text or a zero denominator.
struct ParseError : Error {
  using Error::Error;
};

// sqrt_exact / int_isqrt on a value with no exact root.
struct NotASquare : Error {
  using Error::Error;
};

// Precondition violations: point not on curve, identity where affine
// coordinates are required, division by zero.
struct DomainError : Error {
  using Error::Error;
};

// Rejected (a,b,c): duplicate or zero element, or a pairwise product
// whose successor is not a rational square.
class InvalidTriple : public Error {
 public:
  enum class Reason { duplicate_element, zero_element, nonsquare_pair };

  InvalidTriple(Reason reason, std::string message)
      : Error(std::move(message)), reason_(reason) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// Family or search parameter outside its admissible set (vanishing
// denominator or vanishing/duplicate element).
struct DegenerateParameter : Error {
  using Error::Error;
};

}  // namespace diocurve
