#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpx {

enum class Errc {
  NotSymmetric,
  BadRank,
  UnknownVertex,
  NotATree,
  DivisionByZeroPolynomial,
  NotDivisible,
  DimensionMismatch,
  PreconditionABneq2C,
  ZeroDenominator,
  ShapeViolation,
  SizeMismatch,
  BadType,
  IndexOutOfRange,
  NotASquare,
  StrandMismatch,
  NotPure,
  UnknownClosure,
  ParseError,
  UsageError,
  DomainError,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI) can tell usage problems from mathematical ones.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::BadRank: return "BadRank";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NotATree: return "NotATree";
    case Errc::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::PreconditionABneq2C: return "PreconditionABneq2C";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::ShapeViolation: return "ShapeViolation";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::BadType: return "BadType";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotASquare: return "NotASquare";
    case Errc::StrandMismatch: return "StrandMismatch";
    case Errc::NotPure: return "NotPure";
    case Errc::UnknownClosure: return "UnknownClosure";
    case Errc::ParseError: return "ParseError";
    case Errc::UsageError: return "UsageError";
    case Errc::DomainError: return "DomainError";
  }
  return "Error";
}

}  // namespace cpx
