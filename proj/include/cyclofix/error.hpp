#pragma once

#include <stdexcept>
#include <cstddef>
#include <string>

namespace cyclofix {

// Base of every domain error raised by the library. name() is the stable
// identifier printed by the command-line tool ("NotAFixedPoint", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define CYCLOFIX_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

// exactnum
CYCLOFIX_DEFINE_ERROR(DivisionByZero);
CYCLOFIX_DEFINE_ERROR(ConductorMismatch);
CYCLOFIX_DEFINE_ERROR(ConductorLimit);
// ratfunc
CYCLOFIX_DEFINE_ERROR(RepeatedPole);
CYCLOFIX_DEFINE_ERROR(NonCyclotomicPole);
CYCLOFIX_DEFINE_ERROR(NonCyclotomicFactor);
CYCLOFIX_DEFINE_ERROR(ZeroDenominator);
// cosets
CYCLOFIX_DEFINE_ERROR(NotCoprime);
// decimation
CYCLOFIX_DEFINE_ERROR(InsufficientWindow);
CYCLOFIX_DEFINE_ERROR(ReconstructionMismatch);
CYCLOFIX_DEFINE_ERROR(UnrepresentableImage);
// fixedpoints
CYCLOFIX_DEFINE_ERROR(NotDistinguished);
CYCLOFIX_DEFINE_ERROR(BadIndex);

#undef CYCLOFIX_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("ParseError", message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cyclofix
