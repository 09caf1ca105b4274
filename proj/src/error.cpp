#include "sympl/error.hpp"

namespace sympl {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Parse: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotHalfIntegral: return "NotHalfIntegral";
    case Errc::NonIntegralDifference: return "NonIntegralDifference";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::RankOne: return "RankOne";
    case Errc::NonConstantBottomEntry: return "NonConstantBottomEntry";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::NotDominant: return "NotDominant";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::TailNotConstant: return "TailNotConstant";
    case Errc::NotScalarWeight: return "NotScalarWeight";
    case Errc::BottomEntryNotRank: return "BottomEntryNotRank";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::MissingAssignment: return "MissingAssignment";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::Singular: return "Singular";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::SizeOne: return "SizeOne";
    case Errc::SizeTooLarge: return "SizeTooLarge";
    case Errc::DegreeExceedsGrid: return "DegreeExceedsGrid";
  }
  return "UnknownError";
}

}  // namespace sympl
