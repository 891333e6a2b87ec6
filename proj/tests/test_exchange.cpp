#include <doctest.h>

#include <random>

#include "lucas/error.hpp"
#include "lucas/exchange.hpp"
#include "lucas/formats.hpp"

using namespace lucas;

TEST_CASE("frame encoding") {
  const std::string frame = encode_frame("s=18\nc=1,2\n");
  REQUIRE(frame.size() == 4 + 11);
  CHECK(frame.substr(0, 4) == std::string("\0\0\0\x0b", 4));
  std::size_t used = 0;
  CHECK(decode_frame(frame, &used) == "s=18\nc=1,2\n");
  CHECK(used == frame.size());
  CHECK(decode_frame(encode_frame("")) == "");
  // incomplete input
  CHECK_FALSE(decode_frame(frame.substr(0, 3)).has_value());
  CHECK_FALSE(decode_frame(frame.substr(0, 10)).has_value());
  // trailing bytes belong to the next frame
  CHECK(decode_frame(frame + "xyz", &used) == "s=18\nc=1,2\n");
  CHECK(used == frame.size());
  // big-endian length
  const std::string big = encode_frame(std::string(0x010203, 'a'));
  CHECK(static_cast<unsigned char>(big[1]) == 0x01);
  CHECK(static_cast<unsigned char>(big[2]) == 0x02);
  CHECK(static_cast<unsigned char>(big[3]) == 0x03);
}

TEST_CASE("frames round-trip arbitrary envelopes") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::uint64_t> value(0, 1000000);
  std::uniform_int_distribution<std::size_t> len(0, 300);
  for (int trial = 0; trial < 100; ++trial) {
    Envelope env{value(rng), SymbolStream(len(rng))};
    for (auto& v : env.ciphertext) v = value(rng);
    const auto payload = decode_frame(encode_frame(format_envelope(env)));
    REQUIRE(payload.has_value());
    CHECK(parse_envelope(*payload) == env);
  }
}

TEST_CASE("exchange demo with the worked example") {
  const ExchangeResult result = run_exchange_demo(ExchangeConfig{});
  CHECK(result.match);
  CHECK(result.sender_lambda == 3);
  CHECK(result.receiver_lambda == 3u);
  CHECK(result.recovered == "NOBLE2022");
  CHECK(result.transcript.back() == "MATCH: NOBLE2022");
  REQUIRE(result.wire_payloads.size() == 2);
  CHECK(result.wire_payloads[0] == "s=18\nc=4,32,31,1,24,36,14,25,18\n");
  for (const auto& payload : result.wire_payloads) {
    for (const char* row : {"9,17,35", "35,11,19", "19,16,29", "9 17 35", "35 11 19", "19 16 29"}) {
      CHECK(payload.find(row) == std::string::npos);
    }
  }
}

TEST_CASE("exchange demo with random valid parameters") {
  std::mt19937_64 rng(31337);
  const Prime p(37);
  const auto roots = primitive_roots(p);
  const std::string alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 ";
  int runs = 0;
  while (runs < 20) {
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    std::uniform_int_distribution<std::uint64_t> exponent(2, 35);
    ExchangeConfig config;
    config.alpha = roots[pick(rng)].value();
    config.d = exponent(rng);
    config.e = exponent(rng);
    std::uniform_int_distribution<std::size_t> len(1, 20);
    std::uniform_int_distribution<std::size_t> ch(0, 35);
    config.message.clear();
    for (std::size_t i = len(rng); i > 0; --i) config.message.push_back(alphabet[ch(rng)]);
    const KeyPair keys = keygen(p, Residue(config.alpha, p), config.d);
    try {
      derive_session(keys.pub, config.e);
    } catch (const Error&) {
      continue;  // degenerate lambda or singular key: the sender would pick another e
    }
    const ExchangeResult result = run_exchange_demo(config);
    CHECK(result.match);
    CHECK(result.transcript.back() == "MATCH: " + config.message);
    ++runs;
  }
}

TEST_CASE("receiver with the wrong secret exponent notices") {
  ExchangeConfig config;
  int checked = 0;
  for (std::uint64_t wrong_d = 2; wrong_d < 36; ++wrong_d) {
    // lambda' = s^{D'} computed directly
    const auto lambda_prime = mod_pow(Residue(18, Prime(37)), wrong_d).value();
    if (lambda_prime == 3) continue;
    config.receiver_d = wrong_d;
    const ExchangeResult result = run_exchange_demo(config);
    CHECK_FALSE(result.match);
    CHECK(result.transcript.back().starts_with("MISMATCH"));
    if (result.receiver_lambda) CHECK(*result.receiver_lambda == lambda_prime);
    ++checked;
    if (checked == 5) break;
  }
  CHECK(checked == 5);
}

TEST_CASE("explicit port and bad parameters") {
  ExchangeConfig config;
  config.e = 1;
  CHECK_THROWS_AS(run_exchange_demo(config), Error);
  config.e = 23;
  config.alpha = 4;
  CHECK_THROWS_AS(run_exchange_demo(config), Error);
}
