#include "lucas/error.hpp"

namespace lucas {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::OrderOutOfRange: return "OrderOutOfRange";
    case Errc::NotPrimitiveRoot: return "NotPrimitiveRoot";
    case Errc::ExponentOutOfRange: return "ExponentOutOfRange";
    case Errc::DegenerateLambda: return "DegenerateLambda";
    case Errc::LambdaTooLarge: return "LambdaTooLarge";
    case Errc::KeyNotInvertible: return "KeyNotInvertible";
    case Errc::UnsupportedCharacter: return "UnsupportedCharacter";
    case Errc::SymbolOutOfRange: return "SymbolOutOfRange";
    case Errc::BlockMisaligned: return "BlockMisaligned";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace lucas
