#include "wittsig/error.hpp"

namespace wittsig {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::Degenerate: return "Degenerate";
    case Errc::ZeroEntry: return "ZeroEntry";
    case Errc::NotPrime: return "NotPrime";
    case Errc::PrimeMismatch: return "PrimeMismatch";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NumberTooLarge: return "NumberTooLarge";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::NotEven: return "NotEven";
    case Errc::DeterminantTooLarge: return "DeterminantTooLarge";
    case Errc::NotIsotropic: return "NotIsotropic";
    case Errc::InvalidSeifert: return "InvalidSeifert";
    case Errc::DegenerateParameter: return "DegenerateParameter";
    case Errc::InvalidWindow: return "InvalidWindow";
    case Errc::NotFound: return "NotFound";
    case Errc::Malformed: return "Malformed";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace wittsig
