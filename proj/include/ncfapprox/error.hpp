#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncfapprox {

// Every library failure carries one of these kinds so that front ends can map
// them onto stable exit codes.
enum class ErrorKind {
  MixedFields,
  DivisionByZero,
  OutOfRange,
  PeriodNotFound,
  NoRootInRange,
  IndexBeyondFiniteExpansion,
  FiniteExpansion,
  EmptyPeriod,
  FieldMismatch,
  NotPeriodic,
  LatticeGamma,
  PrecisionExhausted,
  SearchSpaceTooLarge,
  RBelow3,
  ParityMismatch,
  BadFamilyParams,
  OutOfTable,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ncfapprox
