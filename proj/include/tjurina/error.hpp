#pragma once

#include <stdexcept>
#include <string>

namespace tjurina {

enum class Errc {
  ParseError,
  FieldMismatch,
  BadCoefficient,     // literal not representable in the field (e.g. 1/p over F_p)
  UnknownVariable,
  DegreeTooSmall,
  NotReduced,
  CharDividesDegree,
  CharNotZero,
  ShapePositionFailed,
  NotZeroDimensional,
  NotStabilized,
  SaturationCapExceeded,
  EulerViolated,
  AllZero,
  DegreeMismatch,
  CoordinateSearchFailed,
  DegenerateLine,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tjurina
