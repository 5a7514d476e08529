#pragma once

#include <stdexcept>
#include <string>

namespace state4 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define STATE4_ERROR(Name)   \
  class Name : public Error { \
   public:                    \
    using Error::Error;       \
  }

STATE4_ERROR(DivisionByZero);
STATE4_ERROR(ValidationError);
STATE4_ERROR(MalformedFacet);
STATE4_ERROR(UnknownSimplex);
STATE4_ERROR(NonOrientable);
STATE4_ERROR(IndexOutOfRange);
STATE4_ERROR(NotAFace);
STATE4_ERROR(InvalidSite);
STATE4_ERROR(NameCollision);
STATE4_ERROR(NoValidMove);
STATE4_ERROR(InvalidCocycle);
STATE4_ERROR(UnsupportedTwist);
STATE4_ERROR(PentagonViolation);
STATE4_ERROR(HexagonViolation);
STATE4_ERROR(SingularPairing);
STATE4_ERROR(IndexMismatch);
STATE4_ERROR(UnsupportedReduction);
STATE4_ERROR(ReductionSelfCheckFailed);

#undef STATE4_ERROR

/// Malformed input file or literal. `location` is a JSON pointer or a
/// human-readable position, possibly empty.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string location = {})
      : Error(location.empty() ? what : location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace state4
