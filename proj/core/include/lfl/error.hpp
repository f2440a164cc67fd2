#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lfl {

/// Failure kinds raised by the computational modules. The CLI maps every
/// kind except usage problems to exit code 1 and prints `to_string(code)`.
enum class Errc {
  NotPrime,
  OutOfRange,
  NotADivisor,
  ZeroResidue,
  EvenOrder,
  NonPositive,
  PoleAtOne,
  PrincipalCharacter,
  EmptySubgroupMin,
  BudgetExceeded,
  SharedFactorWithP,
  NonCoprimePair,
  MollifierTooLong,
  DegenerateD,
  EmptyRange,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::ZeroResidue: return "ZeroResidue";
    case Errc::EvenOrder: return "EvenOrder";
    case Errc::NonPositive: return "NonPositive";
    case Errc::PoleAtOne: return "PoleAtOne";
    case Errc::PrincipalCharacter: return "PrincipalCharacter";
    case Errc::EmptySubgroupMin: return "EmptySubgroupMin";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SharedFactorWithP: return "SharedFactorWithP";
    case Errc::NonCoprimePair: return "NonCoprimePair";
    case Errc::MollifierTooLong: return "MollifierTooLong";
    case Errc::DegenerateD: return "DegenerateD";
    case Errc::EmptyRange: return "EmptyRange";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lfl
