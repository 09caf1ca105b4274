#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympl {

enum class Errc {
  Parse,
  InvalidArgument,
  NotHalfIntegral,
  NonIntegralDifference,
  ShapeMismatch,
  RankMismatch,
  RankTooLarge,
  RankOne,
  NonConstantBottomEntry,
  NonIntegral,
  NotDominant,
  IndexOutOfRange,
  HypothesisViolated,
  TailNotConstant,
  NotScalarWeight,
  BottomEntryNotRank,
  LengthMismatch,
  PoleAtPoint,
  MissingAssignment,
  DivisionByZero,
  NotSymmetric,
  Singular,
  NotUnimodular,
  SizeOne,
  SizeTooLarge,
  DegreeExceedsGrid,
};

std::string_view errc_name(Errc code) noexcept;

/// Domain error raised by every library operation. The CLI echoes name().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace sympl
