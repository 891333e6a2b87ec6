#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucas/protocol.hpp"

namespace lucas {

// Frame: 32-bit big-endian payload length followed by the payload bytes.
// Payloads are Envelope text.

std::string encode_frame(std::string_view payload);

/// Decodes one frame from the front of `bytes`. Returns nullopt when more
/// bytes are needed; `consumed` receives the frame's total size.
std::optional<std::string> decode_frame(std::string_view bytes, std::size_t* consumed = nullptr);

/// Short hex digest of a key matrix, for transcripts.
std::string key_digest(const ResidueMatrix& key);

struct ExchangeConfig {
  std::uint64_t p = 37;
  std::uint64_t alpha = 17;
  std::uint64_t d = 10;
  std::uint64_t e = 23;
  std::string message = "NOBLE2022";
  /// When set, the receiver decrypts with this exponent instead of d.
  std::optional<std::uint64_t> receiver_d;
  /// 0 picks a free ephemeral port.
  std::uint16_t port = 0;
};

struct ExchangeResult {
  std::vector<std::string> transcript;
  /// Raw payloads in the order they crossed the socket.
  std::vector<std::string> wire_payloads;
  std::uint64_t sender_lambda = 0;
  std::optional<std::uint64_t> receiver_lambda;
  std::string recovered;
  bool match = false;
};

/// Runs the receiver (Bob) as a loopback listener on its own thread and the
/// sender (Alice) as a connector on the calling thread. Only the Envelope
/// crosses the wire in each direction. Throws Error(Io) on socket failures.
ExchangeResult run_exchange_demo(const ExchangeConfig& config);

}  // namespace lucas
