#include "lucas/protocol.hpp"

#include <random>
#include <string>

#include "lucas/error.hpp"
#include "lucas/sequences.hpp"

namespace lucas {

KeyPair keygen(Prime p, Residue alpha, std::uint64_t d) {
  if (alpha.modulus() != p) throw Error(Errc::ModulusMismatch, "alpha is not a residue mod p");
  if (alpha.value() == 0 || !is_primitive_root(alpha)) {
    throw Error(Errc::NotPrimitiveRoot,
                std::to_string(alpha.value()) + " is not a primitive root mod " + std::to_string(p.value()));
  }
  if (d <= 1 || d >= euler_phi(p)) {
    throw Error(Errc::ExponentOutOfRange, "secret exponent must satisfy 1 < d < " + std::to_string(euler_phi(p)));
  }
  return KeyPair{PublicKey{p, alpha, mod_pow(alpha, d)}, SecretKey{p, d}};
}

std::uint64_t random_exponent(Prime p) {
  const std::uint64_t phi = euler_phi(p);
  if (phi <= 2) throw Error(Errc::ExponentOutOfRange, "no exponent satisfies 1 < x < " + std::to_string(phi));
  std::random_device rd;
  std::uniform_int_distribution<std::uint64_t> dist(2, phi - 1);
  return dist(rd);
}

SessionParams SessionParams::build(std::uint64_t lambda, std::uint64_t s, Prime p, SessionOptions options) {
  if (lambda < 2) {
    throw Error(Errc::DegenerateLambda, "lambda = " + std::to_string(lambda) + " is degenerate; choose another e");
  }
  if (lambda > static_cast<std::uint64_t>(options.max_lambda)) {
    throw Error(Errc::LambdaTooLarge,
                "lambda = " + std::to_string(lambda) + " exceeds cap " + std::to_string(options.max_lambda));
  }
  const int k = static_cast<int>(lambda);
  const auto index = static_cast<std::int64_t>(s);

  ResidueMatrix key = glm(k, index, p, options.max_lambda);
  if (mat_det(key).value() == 0) {
    throw Error(Errc::KeyNotInvertible,
                "det K = 0 mod " + std::to_string(p.value()) + " for lambda = " + std::to_string(lambda));
  }
  ResidueMatrix key_inverse = glm_closed_inverse(k, index, p, options.max_lambda);

  SymbolStream shift;
  for (const auto& r : lucas_range_mod(k, k, 2 * static_cast<std::int64_t>(k) - 1, p)) shift.push_back(r.value());

  return SessionParams(k, s, std::move(key), std::move(key_inverse), std::move(shift));
}

SessionParams derive_session(const PublicKey& pk, std::uint64_t e, SessionOptions options) {
  if (e <= 1 || e >= euler_phi(pk.p)) {
    throw Error(Errc::ExponentOutOfRange, "sender exponent must satisfy 1 < e < " + std::to_string(euler_phi(pk.p)));
  }
  const Residue s = mod_pow(pk.e1, e);
  const Residue lambda = mod_pow(pk.e2, e);
  return SessionParams::build(lambda.value(), s.value(), pk.p, options);
}

SessionParams recover_session(std::uint64_t s, const SecretKey& sk, SessionOptions options) {
  if (s == 0 || s >= sk.p.value()) {
    throw Error(Errc::ExponentOutOfRange, "signature must satisfy 1 <= s < " + std::to_string(sk.p.value()));
  }
  const Residue lambda = mod_pow(Residue(s, sk.p), sk.d);
  return SessionParams::build(lambda.value(), s, sk.p, options);
}

SymbolStream encode_text(std::string_view text) {
  SymbolStream out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= 'A' && c <= 'Z') {
      out.push_back(static_cast<std::uint64_t>(c - 'A'));
    } else if (c >= 'a' && c <= 'z') {
      out.push_back(static_cast<std::uint64_t>(c - 'a'));
    } else if (c >= '0' && c <= '9') {
      out.push_back(static_cast<std::uint64_t>(26 + (c - '0')));
    } else if (c == ' ') {
      out.push_back(kPadSymbol);
    } else {
      throw Error(Errc::UnsupportedCharacter, "unsupported character at position " + std::to_string(i));
    }
  }
  return out;
}

std::string decode_text(const SymbolStream& stream) {
  std::string out;
  out.reserve(stream.size());
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const std::uint64_t v = stream[i];
    if (v < 26) {
      out.push_back(static_cast<char>('A' + v));
    } else if (v < 36) {
      out.push_back(static_cast<char>('0' + (v - 26)));
    } else if (v == kPadSymbol) {
      out.push_back(' ');
    } else {
      throw Error(Errc::SymbolOutOfRange,
                  "symbol " + std::to_string(v) + " at position " + std::to_string(i) + " is outside Z_37");
    }
  }
  return out;
}

SymbolStream pad_blocks(SymbolStream stream, int lambda) {
  if (lambda < 2) throw Error(Errc::DegenerateLambda, "block size must be >= 2");
  while (stream.size() % static_cast<std::size_t>(lambda) != 0) stream.push_back(kPadSymbol);
  return stream;
}

namespace {

void check_stream(const SymbolStream& stream, const SessionParams& session) {
  if (stream.size() % static_cast<std::size_t>(session.lambda()) != 0) {
    throw Error(Errc::BlockMisaligned, "stream length " + std::to_string(stream.size()) +
                                           " is not a multiple of lambda = " + std::to_string(session.lambda()));
  }
  const std::uint64_t p = session.modulus().value();
  for (std::size_t i = 0; i < stream.size(); ++i) {
    if (stream[i] >= p) {
      throw Error(Errc::SymbolOutOfRange,
                  "symbol " + std::to_string(stream[i]) + " at position " + std::to_string(i) + " is not below " +
                      std::to_string(p));
    }
  }
}

// Row vector times matrix, mod p, written into out[offset .. offset+k).
void row_times(const std::uint64_t* row, const ResidueMatrix& m, std::uint64_t* out) {
  const std::uint64_t p = m.modulus().value();
  for (int j = 0; j < m.order(); ++j) {
    std::uint64_t acc = 0;
    for (int i = 0; i < m.order(); ++i) acc = add_mod(acc, mul_mod(row[i], m(i, j), p), p);
    out[j] = acc;
  }
}

}  // namespace

SymbolStream encrypt(const SymbolStream& plain, const SessionParams& session) {
  check_stream(plain, session);
  const std::uint64_t p = session.modulus().value();
  const auto k = static_cast<std::size_t>(session.lambda());
  SymbolStream out(plain.size());
  for (std::size_t start = 0; start < plain.size(); start += k) {
    row_times(plain.data() + start, session.key_matrix(), out.data() + start);
    for (std::size_t j = 0; j < k; ++j) out[start + j] = add_mod(out[start + j], session.shift()[j], p);
  }
  return out;
}

SymbolStream decrypt(const SymbolStream& cipher, const SessionParams& session) {
  check_stream(cipher, session);
  const std::uint64_t p = session.modulus().value();
  const auto k = static_cast<std::size_t>(session.lambda());
  SymbolStream out(cipher.size());
  SymbolStream block(k);
  for (std::size_t start = 0; start < cipher.size(); start += k) {
    for (std::size_t j = 0; j < k; ++j) block[j] = sub_mod(cipher[start + j], session.shift()[j], p);
    row_times(block.data(), session.key_inverse(), out.data() + start);
  }
  return out;
}

}  // namespace lucas
