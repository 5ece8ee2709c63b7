#include "ranklab/error.hpp"

namespace ranklab {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::RosterMismatch: return "RosterMismatch";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::TooFewPlayers: return "TooFewPlayers";
    case Errc::EmptyParameters: return "EmptyParameters";
    case Errc::UnknownPlayer: return "UnknownPlayer";
    case Errc::DrawNotSupported: return "DrawNotSupported";
    case Errc::IsolatedPlayer: return "IsolatedPlayer";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::NonUniqueStationary: return "NonUniqueStationary";
    case Errc::InvalidAlpha: return "InvalidAlpha";
    case Errc::NotStrictOrder: return "NotStrictOrder";
    case Errc::ParseError: return "ParseError";
  }
  return "?";
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::RosterMismatch:
    case Errc::InvalidPermutation:
    case Errc::TooFewPlayers:
    case Errc::EmptyParameters:
    case Errc::UnknownPlayer:
    case Errc::ParseError:
      return true;
    case Errc::DrawNotSupported:
    case Errc::IsolatedPlayer:
    case Errc::SingularSystem:
    case Errc::NonUniqueStationary:
    case Errc::InvalidAlpha:
    case Errc::NotStrictOrder:
      return false;
  }
  return true;
}

}  // namespace ranklab
