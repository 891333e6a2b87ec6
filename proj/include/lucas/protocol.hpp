#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lucas/matrices.hpp"
#include "lucas/numtheory.hpp"

namespace lucas {

/// pk(p, E1, E2) with E1 a primitive root and E2 = E1^D mod p.
struct PublicKey {
  Prime p;
  Residue e1;
  Residue e2;

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

/// The receiver's secret exponent D, 1 < D < phi(p), with its modulus.
struct SecretKey {
  Prime p;
  std::uint64_t d;

  friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

struct KeyPair {
  PublicKey pub;
  SecretKey sec;
};

/// Throws NotPrimitiveRoot or ExponentOutOfRange.
KeyPair keygen(Prime p, Residue alpha, std::uint64_t d);

/// Uniform draw from (1, phi(p)) using the OS entropy source.
std::uint64_t random_exponent(Prime p);

/// Residues mod 37 in codec mode, raw residues mod p otherwise.
using SymbolStream = std::vector<std::uint64_t>;

inline constexpr std::uint64_t kAlphabetSize = 37;
inline constexpr std::uint64_t kPadSymbol = 36;

struct SessionOptions {
  int max_lambda = kDefaultMaxOrder;
};

/// Agreed parameters (lambda, s) and everything both ends derive from them:
/// K = L_lambda^(s) mod p, B = [l_{lambda,lambda}, ..., l_{lambda,2lambda-1}] mod p,
/// and K* = L_lambda^(-s) H^{-1} mod p. Immutable once built.
class SessionParams {
 public:
  /// Throws DegenerateLambda, LambdaTooLarge or KeyNotInvertible.
  static SessionParams build(std::uint64_t lambda, std::uint64_t s, Prime p, SessionOptions options = {});

  int lambda() const noexcept { return lambda_; }
  std::uint64_t s() const noexcept { return s_; }
  Prime modulus() const noexcept { return key_.modulus(); }
  const ResidueMatrix& key_matrix() const noexcept { return key_; }
  const ResidueMatrix& key_inverse() const noexcept { return key_inverse_; }
  const SymbolStream& shift() const noexcept { return shift_; }

  friend bool operator==(const SessionParams&, const SessionParams&) = default;

 private:
  SessionParams(int lambda, std::uint64_t s, ResidueMatrix key, ResidueMatrix key_inverse, SymbolStream shift)
      : lambda_(lambda), s_(s), key_(std::move(key)), key_inverse_(std::move(key_inverse)), shift_(std::move(shift)) {}

  int lambda_;
  std::uint64_t s_;
  ResidueMatrix key_;
  ResidueMatrix key_inverse_;
  SymbolStream shift_;
};

/// Sender side: s = E1^e, lambda = E2^e. Requires 1 < e < phi(p).
SessionParams derive_session(const PublicKey& pk, std::uint64_t e, SessionOptions options = {});

/// Receiver side: lambda = s^D. Requires 1 <= s < p.
SessionParams recover_session(std::uint64_t s, const SecretKey& sk, SessionOptions options = {});

/// A-Z -> 0-25, 0-9 -> 26-35, space -> 36. Lowercase is folded to upper.
SymbolStream encode_text(std::string_view text);
std::string decode_text(const SymbolStream& stream);

/// Appends the space symbol until the length is a multiple of lambda.
SymbolStream pad_blocks(SymbolStream stream, int lambda);

/// c_i = p_i K + B (mod p) for each lambda-symbol row block.
SymbolStream encrypt(const SymbolStream& plain, const SessionParams& session);
/// p_i = (c_i - B) K* (mod p).
SymbolStream decrypt(const SymbolStream& cipher, const SessionParams& session);

/// What crosses the wire: the signature s and the ciphertext.
struct Envelope {
  std::uint64_t s = 0;
  SymbolStream ciphertext;

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

}  // namespace lucas
