#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lucas {

enum class Errc {
  NotPrime,
  NotInvertible,
  DimensionMismatch,
  ModulusMismatch,
  OrderOutOfRange,
  NotPrimitiveRoot,
  ExponentOutOfRange,
  DegenerateLambda,
  LambdaTooLarge,
  KeyNotInvertible,
  UnsupportedCharacter,
  SymbolOutOfRange,
  BlockMisaligned,
  SearchSpaceTooLarge,
  Parse,
  Io,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lucas
